#pragma once

// Canonical byte encoding shared by everything that is signed, hashed, or
// stored on chain. The format is deliberately dumb: records are a flat
// sequence of fields, each field a 4-byte big-endian length followed by the
// payload bytes, lists a count field followed by the elements. Unique parse
// makes the encoding injective per record type; a leading tag byte separates
// record types. The full layout is documented in docs/FORMATS.md.

#include "bytes.hpp"
#include "errors.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace dhtee {

using CanonicalBytes = Bytes;

struct Digest {
    std::array<std::uint8_t, 32> value{};

    auto operator<=>(const Digest&) const = default;
};

Digest sha256(ByteView data);
std::string short_hex(const Digest& d); // first 8 bytes, for trace lines

// Record type tags (first field of every canonical encoding).
enum class RecordTag : std::uint8_t {
    transaction = 0x01,
    block_header = 0x02,
    block = 0x03,
    inclusion_proof = 0x04,
    attestation_request = 0x05,
    native_report = 0x06,
    verification_result = 0x07,
    enroll_payload = 0x08,
    governance_payload = 0x09,
    device_record = 0x0a,
    attribute_record = 0x0b,
    vendor_endorsement = 0x0c,
    vendor_root_cert = 0x0d,
    witness_statement = 0x0e,
    validator_set = 0x0f,
    merkle_proof = 0x10,
    requirement_list = 0x11,
    plain_transfer = 0x12,
};

class Encoder {
public:
    void put_tag(RecordTag tag) { put_u8(static_cast<std::uint8_t>(tag)); }
    void put_u8(std::uint8_t v);
    void put_u32(std::uint32_t v);
    void put_u64(std::uint64_t v);
    void put_bytes(ByteView data);
    void put_str(std::string_view s);
    void put_digest(const Digest& d) { put_bytes(ByteView(d.value.data(), d.value.size())); }
    template <std::size_t N>
    void put_fixed(const std::array<std::uint8_t, N>& a) {
        put_bytes(ByteView(a.data(), a.size()));
    }
    void put_count(std::size_t n);

    const Bytes& bytes() const { return out_; }
    Bytes take() { return std::move(out_); }

private:
    void put_len(std::uint32_t len);
    Bytes out_;
};

// Strict decoder: throws Errc::decode_malformed on any deviation from the
// canonical form (wrong field width, non-canonical flag byte, count larger
// than the remaining input, trailing bytes).
class Decoder {
public:
    explicit Decoder(ByteView data) : in_(data) {}

    RecordTag get_tag();
    void expect_tag(RecordTag tag);
    std::uint8_t get_u8();
    bool get_flag(); // u8 restricted to {0,1}
    std::uint32_t get_u32();
    std::uint64_t get_u64();
    Bytes get_bytes();
    std::string get_str();
    Digest get_digest();
    template <std::size_t N>
    std::array<std::uint8_t, N> get_fixed() {
        ByteView v = get_field(N);
        std::array<std::uint8_t, N> out;
        std::copy(v.begin(), v.end(), out.begin());
        return out;
    }
    // Count of list elements, each at least min_element_bytes long on the wire.
    std::uint32_t get_count(std::size_t min_element_bytes = 4);

    bool done() const { return pos_ == in_.size(); }
    void expect_done();
    std::size_t remaining() const { return in_.size() - pos_; }

private:
    std::uint32_t get_len();
    ByteView get_field(std::size_t expected_len);
    ByteView in_;
    std::size_t pos_ = 0;
};

// Merkle accumulation over 32-byte digests. Odd levels duplicate the last
// node. Interior node = sha256(left || right).
struct MerkleStep {
    Digest sibling;
    bool sibling_on_left = false;
};

struct MerkleProof {
    std::uint32_t leaf_index = 0;
    std::vector<MerkleStep> path;
    Digest root;
};

Digest merkle_root(std::span<const Digest> leaves);
MerkleProof merkle_prove(std::span<const Digest> leaves, std::uint32_t index);
bool verify_merkle(const MerkleProof& proof, const Digest& leaf);

void encode_merkle_proof(Encoder& enc, const MerkleProof& proof);
MerkleProof decode_merkle_proof(Decoder& dec);

} // namespace dhtee

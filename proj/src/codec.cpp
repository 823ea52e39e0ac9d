#include "codec.hpp"

#include <sodium.h>

#include <algorithm>

namespace dhtee {

std::string hex(ByteView bytes) {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0x0f]);
    }
    return out;
}

Bytes from_hex(std::string_view text) {
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    if (text.size() % 2 != 0) throw Error(Errc::decode_malformed, "odd hex length");
    Bytes out;
    out.reserve(text.size() / 2);
    for (std::size_t i = 0; i < text.size(); i += 2) {
        int hi = nibble(text[i]);
        int lo = nibble(text[i + 1]);
        if (hi < 0 || lo < 0) throw Error(Errc::decode_malformed, "bad hex digit");
        out.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
    }
    return out;
}

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::empty_leaves: return "EmptyLeaves";
        case Errc::index_out_of_range: return "IndexOutOfRange";
        case Errc::decode_malformed: return "DecodeMalformed";
        case Errc::invalid_public_share: return "InvalidPublicShare";
        case Errc::authentication_failure: return "AuthenticationFailure";
        case Errc::duplicate_attribute: return "DuplicateAttribute";
        case Errc::unknown_attribute: return "UnknownAttribute";
        case Errc::device_unknown: return "DeviceUnknown";
        case Errc::not_initialized: return "NotInitialized";
        case Errc::unsupported_scheme: return "UnsupportedScheme";
        case Errc::duplicate_scheme: return "DuplicateScheme";
        case Errc::all_nodes_unreachable: return "AllNodesUnreachable";
        case Errc::no_quorum: return "NoQuorum";
        case Errc::not_enrolled: return "NotEnrolled";
        case Errc::timeout: return "Timeout";
        case Errc::verification_failed: return "VerificationFailed";
        case Errc::endorsement_invalid: return "EndorsementInvalid";
        case Errc::duplicate_device: return "DuplicateDevice";
        case Errc::key_mismatch: return "KeyMismatch";
        case Errc::insufficient_witnesses: return "InsufficientWitnesses";
        case Errc::unknown_actor: return "UnknownActor";
        case Errc::config_invalid: return "ConfigInvalid";
    }
    return "UnknownError";
}

Digest sha256(ByteView data) {
    Digest d;
    crypto_hash_sha256(d.value.data(), data.data(), data.size());
    return d;
}

std::string short_hex(const Digest& d) {
    return hex(ByteView(d.value.data(), 8));
}

void Encoder::put_len(std::uint32_t len) {
    out_.push_back(static_cast<std::uint8_t>(len >> 24));
    out_.push_back(static_cast<std::uint8_t>(len >> 16));
    out_.push_back(static_cast<std::uint8_t>(len >> 8));
    out_.push_back(static_cast<std::uint8_t>(len));
}

void Encoder::put_u8(std::uint8_t v) {
    put_len(1);
    out_.push_back(v);
}

void Encoder::put_u32(std::uint32_t v) {
    put_len(4);
    out_.push_back(static_cast<std::uint8_t>(v >> 24));
    out_.push_back(static_cast<std::uint8_t>(v >> 16));
    out_.push_back(static_cast<std::uint8_t>(v >> 8));
    out_.push_back(static_cast<std::uint8_t>(v));
}

void Encoder::put_u64(std::uint64_t v) {
    put_len(8);
    for (int shift = 56; shift >= 0; shift -= 8)
        out_.push_back(static_cast<std::uint8_t>(v >> shift));
}

void Encoder::put_bytes(ByteView data) {
    put_len(static_cast<std::uint32_t>(data.size()));
    out_.insert(out_.end(), data.begin(), data.end());
}

void Encoder::put_str(std::string_view s) {
    put_bytes(ByteView(reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
}

void Encoder::put_count(std::size_t n) {
    put_u32(static_cast<std::uint32_t>(n));
}

std::uint32_t Decoder::get_len() {
    if (in_.size() - pos_ < 4) throw Error(Errc::decode_malformed, "truncated length prefix");
    std::uint32_t len = (static_cast<std::uint32_t>(in_[pos_]) << 24) |
                        (static_cast<std::uint32_t>(in_[pos_ + 1]) << 16) |
                        (static_cast<std::uint32_t>(in_[pos_ + 2]) << 8) |
                        static_cast<std::uint32_t>(in_[pos_ + 3]);
    pos_ += 4;
    return len;
}

ByteView Decoder::get_field(std::size_t expected_len) {
    std::uint32_t len = get_len();
    if (len != expected_len) throw Error(Errc::decode_malformed, "unexpected field width");
    if (in_.size() - pos_ < len) throw Error(Errc::decode_malformed, "truncated field");
    ByteView v = in_.subspan(pos_, len);
    pos_ += len;
    return v;
}

RecordTag Decoder::get_tag() {
    return static_cast<RecordTag>(get_u8());
}

void Decoder::expect_tag(RecordTag tag) {
    if (get_tag() != tag) throw Error(Errc::decode_malformed, "record tag mismatch");
}

std::uint8_t Decoder::get_u8() {
    return get_field(1)[0];
}

bool Decoder::get_flag() {
    std::uint8_t v = get_u8();
    if (v > 1) throw Error(Errc::decode_malformed, "non-canonical flag byte");
    return v == 1;
}

std::uint32_t Decoder::get_u32() {
    ByteView v = get_field(4);
    return (static_cast<std::uint32_t>(v[0]) << 24) | (static_cast<std::uint32_t>(v[1]) << 16) |
           (static_cast<std::uint32_t>(v[2]) << 8) | static_cast<std::uint32_t>(v[3]);
}

std::uint64_t Decoder::get_u64() {
    ByteView v = get_field(8);
    std::uint64_t out = 0;
    for (std::uint8_t b : v) out = (out << 8) | b;
    return out;
}

Bytes Decoder::get_bytes() {
    std::uint32_t len = get_len();
    if (in_.size() - pos_ < len) throw Error(Errc::decode_malformed, "truncated byte field");
    Bytes out(in_.begin() + static_cast<std::ptrdiff_t>(pos_),
              in_.begin() + static_cast<std::ptrdiff_t>(pos_ + len));
    pos_ += len;
    return out;
}

std::string Decoder::get_str() {
    Bytes b = get_bytes();
    return std::string(b.begin(), b.end());
}

Digest Decoder::get_digest() {
    Digest d;
    d.value = get_fixed<32>();
    return d;
}

std::uint32_t Decoder::get_count(std::size_t min_element_bytes) {
    std::uint32_t n = get_u32();
    if (min_element_bytes > 0 && static_cast<std::uint64_t>(n) * min_element_bytes > remaining())
        throw Error(Errc::decode_malformed, "list count exceeds remaining input");
    return n;
}

void Decoder::expect_done() {
    if (!done()) throw Error(Errc::decode_malformed, "trailing bytes after record");
}

namespace {

Digest hash_pair(const Digest& left, const Digest& right) {
    std::array<std::uint8_t, 64> cat;
    std::copy(left.value.begin(), left.value.end(), cat.begin());
    std::copy(right.value.begin(), right.value.end(), cat.begin() + 32);
    return sha256(ByteView(cat.data(), cat.size()));
}

} // namespace

Digest merkle_root(std::span<const Digest> leaves) {
    if (leaves.empty()) throw Error(Errc::empty_leaves, "merkle_root over zero leaves");
    std::vector<Digest> level(leaves.begin(), leaves.end());
    while (level.size() > 1) {
        std::vector<Digest> next;
        next.reserve((level.size() + 1) / 2);
        for (std::size_t i = 0; i < level.size(); i += 2) {
            const Digest& left = level[i];
            const Digest& right = (i + 1 < level.size()) ? level[i + 1] : level[i];
            next.push_back(hash_pair(left, right));
        }
        level = std::move(next);
    }
    return level[0];
}

MerkleProof merkle_prove(std::span<const Digest> leaves, std::uint32_t index) {
    if (leaves.empty()) throw Error(Errc::empty_leaves, "merkle_prove over zero leaves");
    if (index >= leaves.size()) throw Error(Errc::index_out_of_range, "leaf index past end");
    MerkleProof proof;
    proof.leaf_index = index;
    std::vector<Digest> level(leaves.begin(), leaves.end());
    std::uint32_t pos = index;
    while (level.size() > 1) {
        std::uint32_t sib = pos ^ 1u;
        const Digest& sibling = (sib < level.size()) ? level[sib] : level[pos];
        proof.path.push_back(MerkleStep{sibling, (pos & 1u) != 0});
        std::vector<Digest> next;
        next.reserve((level.size() + 1) / 2);
        for (std::size_t i = 0; i < level.size(); i += 2) {
            const Digest& left = level[i];
            const Digest& right = (i + 1 < level.size()) ? level[i + 1] : level[i];
            next.push_back(hash_pair(left, right));
        }
        level = std::move(next);
        pos >>= 1;
    }
    proof.root = level[0];
    return proof;
}

bool verify_merkle(const MerkleProof& proof, const Digest& leaf) {
    if (proof.path.size() >= 32) return false;
    // Side flags are redundant with leaf_index; a proof where they disagree
    // is malformed and must not verify.
    if (proof.path.empty() && proof.leaf_index != 0) return false;
    if (!proof.path.empty() && (proof.leaf_index >> proof.path.size()) != 0) return false;
    Digest node = leaf;
    std::uint32_t pos = proof.leaf_index;
    for (const MerkleStep& step : proof.path) {
        bool odd = (pos & 1u) != 0;
        if (step.sibling_on_left != odd) return false;
        node = odd ? hash_pair(step.sibling, node) : hash_pair(node, step.sibling);
        pos >>= 1;
    }
    return node == proof.root;
}

void encode_merkle_proof(Encoder& enc, const MerkleProof& proof) {
    enc.put_tag(RecordTag::merkle_proof);
    enc.put_u32(proof.leaf_index);
    enc.put_count(proof.path.size());
    for (const MerkleStep& step : proof.path) {
        enc.put_digest(step.sibling);
        enc.put_u8(step.sibling_on_left ? 1 : 0);
    }
    enc.put_digest(proof.root);
}

MerkleProof decode_merkle_proof(Decoder& dec) {
    dec.expect_tag(RecordTag::merkle_proof);
    MerkleProof proof;
    proof.leaf_index = dec.get_u32();
    std::uint32_t n = dec.get_count(32 + 4 + 1 + 4);
    proof.path.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        MerkleStep step;
        step.sibling = dec.get_digest();
        step.sibling_on_left = dec.get_flag();
        proof.path.push_back(step);
    }
    proof.root = dec.get_digest();
    return proof;
}

} // namespace dhtee

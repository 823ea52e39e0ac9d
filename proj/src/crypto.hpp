#pragma once

// Signing, ephemeral key agreement, session key derivation, and authenticated
// encryption for the post-attestation channel. Ed25519 for signatures, X25519
// for key agreement, HKDF-SHA256 for session keys, ChaCha20-Poly1305 for the
// channel. All key generation is seed-driven so scenario runs replay exactly.

#include "bytes.hpp"
#include "codec.hpp"
#include "errors.hpp"

#include <array>
#include <optional>

namespace dhtee {

using PublicKey = std::array<std::uint8_t, 32>;
using Seed32 = std::array<std::uint8_t, 32>;
using Nonce12 = std::array<std::uint8_t, 12>;
using Nonce16 = std::array<std::uint8_t, 16>;

struct SigningKeyPair {
    PublicKey public_key{};
    std::array<std::uint8_t, 64> secret_key{}; // never serialized into records
};

struct Signature {
    std::array<std::uint8_t, 64> bytes{};

    auto operator<=>(const Signature&) const = default;
};

struct KeyAgreementShare {
    PublicKey public_share{};
    std::array<std::uint8_t, 32> secret_scalar{}; // never serialized
};

struct SessionKey {
    std::array<std::uint8_t, 32> key{};
    Digest transcript_hash;

    bool operator==(const SessionKey&) const = default;
};

SigningKeyPair keygen(const Seed32& seed);
Signature sign(const SigningKeyPair& pair, ByteView message);
bool verify(const PublicKey& public_key, ByteView message, const Signature& sig);

KeyAgreementShare ka_generate(const Seed32& seed);
// Throws Errc::invalid_public_share when the peer share is a small-order
// element (all-zero shared secret).
std::array<std::uint8_t, 32> ka_shared(const KeyAgreementShare& mine, const PublicKey& their_public);

SessionKey derive_session(const std::array<std::uint8_t, 32>& shared_secret, const Digest& transcript_hash);

Bytes seal(const SessionKey& key, const Nonce12& nonce, ByteView plaintext);
// nullopt on any authentication failure (truncation, bit flips, wrong key).
std::optional<Bytes> open(const SessionKey& key, const Nonce12& nonce, ByteView ciphertext);

} // namespace dhtee

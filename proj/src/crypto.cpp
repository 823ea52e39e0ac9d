#include "crypto.hpp"

#include <sodium.h>

#include <cstring>
#include <mutex>

namespace dhtee {

namespace {

void ensure_sodium() {
    static std::once_flag flag;
    std::call_once(flag, [] {
        if (sodium_init() < 0) throw std::runtime_error("libsodium initialization failed");
    });
}

using Hmac = std::array<std::uint8_t, 32>;

Hmac hmac_sha256(ByteView key, ByteView data) {
    crypto_auth_hmacsha256_state st;
    crypto_auth_hmacsha256_init(&st, key.data(), key.size());
    crypto_auth_hmacsha256_update(&st, data.data(), data.size());
    Hmac out;
    crypto_auth_hmacsha256_final(&st, out.data());
    return out;
}

constexpr std::string_view kSessionSalt = "dhtee/v1/session";

} // namespace

SigningKeyPair keygen(const Seed32& seed) {
    ensure_sodium();
    SigningKeyPair pair;
    crypto_sign_seed_keypair(pair.public_key.data(), pair.secret_key.data(), seed.data());
    return pair;
}

Signature sign(const SigningKeyPair& pair, ByteView message) {
    ensure_sodium();
    Signature sig;
    crypto_sign_detached(sig.bytes.data(), nullptr, message.data(), message.size(),
                         pair.secret_key.data());
    return sig;
}

bool verify(const PublicKey& public_key, ByteView message, const Signature& sig) {
    ensure_sodium();
    return crypto_sign_verify_detached(sig.bytes.data(), message.data(), message.size(),
                                       public_key.data()) == 0;
}

KeyAgreementShare ka_generate(const Seed32& seed) {
    ensure_sodium();
    KeyAgreementShare share;
    share.secret_scalar = seed;
    crypto_scalarmult_base(share.public_share.data(), share.secret_scalar.data());
    return share;
}

std::array<std::uint8_t, 32> ka_shared(const KeyAgreementShare& mine, const PublicKey& their_public) {
    ensure_sodium();
    std::array<std::uint8_t, 32> shared;
    if (crypto_scalarmult(shared.data(), mine.secret_scalar.data(), their_public.data()) != 0)
        throw Error(Errc::invalid_public_share, "small-order peer share");
    return shared;
}

SessionKey derive_session(const std::array<std::uint8_t, 32>& shared_secret, const Digest& transcript_hash) {
    // HKDF extract-then-expand; a single 32-byte output block.
    Hmac prk = hmac_sha256(to_bytes(kSessionSalt), shared_secret);
    Bytes info(transcript_hash.value.begin(), transcript_hash.value.end());
    info.push_back(0x01);
    Hmac okm = hmac_sha256(prk, info);
    SessionKey out;
    out.key = okm;
    out.transcript_hash = transcript_hash;
    return out;
}

Bytes seal(const SessionKey& key, const Nonce12& nonce, ByteView plaintext) {
    ensure_sodium();
    Bytes ciphertext(plaintext.size() + crypto_aead_chacha20poly1305_ietf_ABYTES);
    unsigned long long clen = 0;
    crypto_aead_chacha20poly1305_ietf_encrypt(ciphertext.data(), &clen, plaintext.data(),
                                              plaintext.size(), nullptr, 0, nullptr, nonce.data(),
                                              key.key.data());
    ciphertext.resize(clen);
    return ciphertext;
}

std::optional<Bytes> open(const SessionKey& key, const Nonce12& nonce, ByteView ciphertext) {
    ensure_sodium();
    if (ciphertext.size() < crypto_aead_chacha20poly1305_ietf_ABYTES) return std::nullopt;
    Bytes plaintext(ciphertext.size() - crypto_aead_chacha20poly1305_ietf_ABYTES);
    unsigned long long plen = 0;
    if (crypto_aead_chacha20poly1305_ietf_decrypt(plaintext.data(), &plen, nullptr,
                                                  ciphertext.data(), ciphertext.size(), nullptr, 0,
                                                  nonce.data(), key.key.data()) != 0)
        return std::nullopt;
    plaintext.resize(plen);
    return plaintext;
}

} // namespace dhtee

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

namespace frc {

using Bytes = std::vector<std::uint8_t>;

/// A file split into m packets of equal length.
struct SourceFile {
    int m = 0;
    std::size_t packet_len = 0;
    std::vector<Bytes> data;

    /// Throws LengthMismatchError unless data has m packets of packet_len bytes.
    void check() const;

    friend bool operator==(const SourceFile&, const SourceFile&) = default;
};

struct CodedPacket {
    int index = 0; ///< one-based, 1..theta
    Bytes payload;

    friend bool operator==(const CodedPacket&, const CodedPacket&) = default;
};

inline constexpr int kMaxCodewordLength = 255;

/// Systematic (theta, m) MDS code over GF(256), applied independently to
/// every byte position.
///
/// Packets 1..m are the source packets. Packet m+1+r evaluates, at point
/// m+r, the interpolating polynomial through the source symbols placed at
/// points 0..m-1, with each source column rescaled so that the first
/// redundant packet is the plain XOR of the sources. The parity block is a
/// row/column-scaled Cauchy matrix, hence every m x m submatrix of the
/// generator is invertible.
class MdsCodec {
public:
    /// Throws FieldCapacityError if theta > 255, ParameterError unless 1 <= m <= theta.
    MdsCodec(int m, int theta);

    int m() const noexcept { return m_; }
    int theta() const noexcept { return theta_; }

    /// Generator coefficient of coded packet `index` (1-based) on source j (0-based).
    std::uint8_t coefficient(int index, int j) const;

    std::vector<CodedPacket> encode(const SourceFile& file) const;

    /// Recovers the file from any m packets with distinct indices; extra
    /// packets are ignored. Source packets present are used directly; only
    /// the erased ones are solved for, with the small inverses cached.
    SourceFile decode(std::span<const CodedPacket> packets) const;

private:
    using Matrix = std::vector<std::vector<std::uint8_t>>;

    static constexpr std::size_t kMaxCachedInverses = 1 << 14;

    /// Inverse of the parity x erased block of the generator.
    std::shared_ptr<const Matrix> inverse_for(const std::vector<int>& parity, const std::vector<int>& erased) const;

    int m_;
    int theta_;
    Matrix parity_; // (theta - m) x m
    mutable std::mutex cache_mutex_;
    mutable std::map<std::vector<int>, std::shared_ptr<const Matrix>> cache_;
};

/// Convenience wrappers around MdsCodec.
std::vector<CodedPacket> mds_encode(const SourceFile& file, int theta);
SourceFile mds_decode(std::span<const CodedPacket> packets, int m, int theta);

} // namespace frc

#include "frc/mds.hpp"

#include "frc/error.hpp"
#include "frc/gf256.hpp"

#include <algorithm>

namespace frc {

namespace gf = gf256;

void SourceFile::check() const
{
    if (m < 1)
        throw ParameterError("source file needs m >= 1");
    if (static_cast<int>(data.size()) != m)
        throw LengthMismatchError("expected " + std::to_string(m) + " packets, found " + std::to_string(data.size()));
    for (std::size_t i = 0; i < data.size(); ++i)
        if (data[i].size() != packet_len)
            throw LengthMismatchError("packet " + std::to_string(i + 1) + " has " + std::to_string(data[i].size()) +
                                      " bytes, expected " + std::to_string(packet_len));
}

MdsCodec::MdsCodec(int m, int theta) : m_(m), theta_(theta)
{
    if (theta > kMaxCodewordLength)
        throw FieldCapacityError("theta=" + std::to_string(theta) + " exceeds the GF(256) limit of " +
                                 std::to_string(kMaxCodewordLength));
    if (m < 1 || m > theta)
        throw ParameterError("need 1 <= m <= theta (m=" + std::to_string(m) + ", theta=" + std::to_string(theta) + ")");

    // Lagrange basis value L_j(x) over the source points 0..m-1.
    auto basis = [m](int j, std::uint8_t x) {
        std::uint8_t num = 1;
        std::uint8_t den = 1;
        for (int l = 0; l < m; ++l) {
            if (l == j)
                continue;
            num = gf::mul(num, gf::add(x, static_cast<std::uint8_t>(l)));
            den = gf::mul(den, gf::add(static_cast<std::uint8_t>(j), static_cast<std::uint8_t>(l)));
        }
        return gf::div(num, den);
    };

    const int redundant = theta - m;
    parity_.assign(static_cast<std::size_t>(redundant), std::vector<std::uint8_t>(static_cast<std::size_t>(m)));
    std::vector<std::uint8_t> scale(static_cast<std::size_t>(m));
    for (int j = 0; j < m && redundant > 0; ++j)
        scale[static_cast<std::size_t>(j)] = gf::inv(basis(j, static_cast<std::uint8_t>(m)));
    for (int r = 0; r < redundant; ++r)
        for (int j = 0; j < m; ++j)
            parity_[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] =
                gf::mul(basis(j, static_cast<std::uint8_t>(m + r)), scale[static_cast<std::size_t>(j)]);
}

std::uint8_t MdsCodec::coefficient(int index, int j) const
{
    if (index < 1 || index > theta_)
        throw IndexOutOfRangeError("packet index " + std::to_string(index) + " outside 1.." + std::to_string(theta_));
    if (index <= m_)
        return index - 1 == j ? 1 : 0;
    return parity_[static_cast<std::size_t>(index - m_ - 1)][static_cast<std::size_t>(j)];
}

std::vector<CodedPacket> MdsCodec::encode(const SourceFile& file) const
{
    file.check();
    if (file.m != m_)
        throw LengthMismatchError("codec expects m=" + std::to_string(m_) + ", file has m=" + std::to_string(file.m));

    std::vector<CodedPacket> out;
    out.reserve(static_cast<std::size_t>(theta_));
    for (int i = 0; i < m_; ++i)
        out.push_back({i + 1, file.data[static_cast<std::size_t>(i)]});
    for (int r = 0; r < theta_ - m_; ++r) {
        Bytes payload(file.packet_len, 0);
        for (int j = 0; j < m_; ++j)
            gf::axpy(parity_[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)],
                     file.data[static_cast<std::size_t>(j)], payload);
        out.push_back({m_ + r + 1, std::move(payload)});
    }
    return out;
}

std::shared_ptr<const MdsCodec::Matrix> MdsCodec::inverse_for(const std::vector<int>& parity,
                                                              const std::vector<int>& erased) const
{
    std::vector<int> key = erased;
    key.insert(key.end(), parity.begin(), parity.end());
    {
        std::lock_guard lock(cache_mutex_);
        if (auto it = cache_.find(key); it != cache_.end())
            return it->second;
    }

    const auto e = erased.size();
    Matrix a(e, std::vector<std::uint8_t>(e));
    Matrix inv(e, std::vector<std::uint8_t>(e, 0));
    for (std::size_t r = 0; r < e; ++r) {
        for (std::size_t c = 0; c < e; ++c)
            a[r][c] = coefficient(parity[r], erased[c]);
        inv[r][r] = 1;
    }
    // Gauss-Jordan elimination.
    for (std::size_t col = 0; col < e; ++col) {
        std::size_t pivot = col;
        while (pivot < e && a[pivot][col] == 0)
            ++pivot;
        if (pivot == e)
            throw Error("generator submatrix is singular; the code is not MDS");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const auto scale = gf::inv(a[col][col]);
        for (std::size_t c = 0; c < e; ++c) {
            a[col][c] = gf::mul(a[col][c], scale);
            inv[col][c] = gf::mul(inv[col][c], scale);
        }
        for (std::size_t r = 0; r < e; ++r) {
            if (r == col || a[r][col] == 0)
                continue;
            const auto f = a[r][col];
            gf::axpy(f, a[col], a[r]);
            gf::axpy(f, inv[col], inv[r]);
        }
    }

    auto shared = std::make_shared<const Matrix>(std::move(inv));
    std::lock_guard lock(cache_mutex_);
    if (cache_.size() >= kMaxCachedInverses)
        cache_.clear();
    return cache_.emplace(std::move(key), std::move(shared)).first->second;
}

SourceFile MdsCodec::decode(std::span<const CodedPacket> packets) const
{
    std::map<int, const CodedPacket*> by_index;
    for (const auto& p : packets) {
        if (p.index < 1 || p.index > theta_)
            throw IndexOutOfRangeError("packet index " + std::to_string(p.index) + " outside 1.." +
                                       std::to_string(theta_));
        by_index.emplace(p.index, &p);
    }
    if (static_cast<int>(by_index.size()) < m_)
        throw InsufficientPacketsError("insufficient packets: need " + std::to_string(m_) + " distinct packets, have " +
                                       std::to_string(by_index.size()));

    // Lowest indices first, so every available source packet is used as is
    // and only the erased ones are solved for from parity packets.
    const std::size_t len = by_index.begin()->second->payload.size();
    SourceFile out{m_, len, std::vector<Bytes>(static_cast<std::size_t>(m_))};
    std::vector<bool> present(static_cast<std::size_t>(m_), false);
    std::vector<int> parity;
    std::vector<const CodedPacket*> parity_rows;
    int used = 0;
    for (auto [index, p] : by_index) {
        if (used == m_)
            break;
        ++used;
        if (p->payload.size() != len)
            throw LengthMismatchError("coded packets have differing lengths");
        if (index <= m_) {
            out.data[static_cast<std::size_t>(index - 1)] = p->payload;
            present[static_cast<std::size_t>(index - 1)] = true;
        } else {
            parity.push_back(index);
            parity_rows.push_back(p);
        }
    }
    if (parity.empty())
        return out;

    std::vector<int> erased;
    for (int j = 0; j < m_; ++j)
        if (!present[static_cast<std::size_t>(j)])
            erased.push_back(j);

    // Strip the known sources from each parity packet, then invert the
    // square block linking erased sources to the parity packets used.
    std::vector<Bytes> syndrome;
    syndrome.reserve(parity.size());
    for (std::size_t r = 0; r < parity.size(); ++r) {
        Bytes s = parity_rows[r]->payload;
        for (int j = 0; j < m_; ++j)
            if (present[static_cast<std::size_t>(j)])
                gf::axpy(coefficient(parity[r], j), out.data[static_cast<std::size_t>(j)], s);
        syndrome.push_back(std::move(s));
    }
    const auto inv = inverse_for(parity, erased);
    for (std::size_t t = 0; t < erased.size(); ++t) {
        Bytes& dst = out.data[static_cast<std::size_t>(erased[t])];
        dst.assign(len, 0);
        for (std::size_t r = 0; r < parity.size(); ++r)
            gf::axpy((*inv)[t][r], syndrome[r], dst);
    }
    return out;
}

std::vector<CodedPacket> mds_encode(const SourceFile& file, int theta) { return MdsCodec(file.m, theta).encode(file); }

SourceFile mds_decode(std::span<const CodedPacket> packets, int m, int theta)
{
    return MdsCodec(m, theta).decode(packets);
}

} // namespace frc

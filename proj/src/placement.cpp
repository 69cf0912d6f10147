#include "fran/placement.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace fran {

namespace {

// Packs bytes big-endian, two per symbol, then zero-pads the symbol count to
// a multiple of d. The original byte length travels with each subfile.
std::vector<std::uint32_t> pack_symbols(const std::vector<std::uint8_t>& bytes, int d) {
    const std::size_t raw = (bytes.size() + 1) / 2;
    const std::size_t padded = (raw + d - 1) / d * d;
    std::vector<std::uint32_t> symbols(padded, 0);
    for (std::size_t s = 0; s < raw; ++s) {
        const std::uint32_t hi = bytes[2 * s];
        const std::uint32_t lo = 2 * s + 1 < bytes.size() ? bytes[2 * s + 1] : 0;
        symbols[s] = (hi << 8) | lo;
    }
    return symbols;
}

std::vector<std::uint8_t> unpack_bytes(const std::vector<std::uint32_t>& symbols,
                                       std::size_t byte_count) {
    std::vector<std::uint8_t> bytes(byte_count, 0);
    for (std::size_t i = 0; i < byte_count; ++i) {
        const std::uint32_t sym = symbols[i / 2];
        bytes[i] = static_cast<std::uint8_t>(i % 2 == 0 ? sym >> 8 : sym & 0xff);
    }
    return bytes;
}

}  // namespace

Library::Library(std::vector<std::vector<std::uint8_t>> files) : files_(std::move(files)) {
    if (files_.empty()) {
        throw std::invalid_argument("library must hold at least one file");
    }
    for (const auto& f : files_) {
        if (f.size() != files_.front().size()) {
            throw std::invalid_argument("library files must all have the same length");
        }
    }
}

const std::vector<std::uint8_t>& Library::file(int file_id) const {
    if (file_id < 1 || file_id > n_files()) {
        throw std::out_of_range("file id " + std::to_string(file_id) + " outside {1, ..., " +
                                std::to_string(n_files()) + "}");
    }
    return files_[file_id - 1];
}

PlacementScheme::PlacementScheme(const Topology& topology, PrimeField field)
    : k_(topology.k()), d_(topology.d()), field_(field) {
    if (field_.p() <= static_cast<std::uint32_t>(k_)) {
        throw std::invalid_argument("field modulus " + std::to_string(field_.p()) +
                                    " too small: need p > K = " + std::to_string(k_));
    }
    generator_.resize(static_cast<std::size_t>(d_) * k_);
    for (int en = 1; en <= k_; ++en) {
        const std::uint32_t alpha = static_cast<std::uint32_t>(en);
        std::uint32_t value = 1;
        for (int row = 0; row < d_; ++row) {
            generator_[static_cast<std::size_t>(row) * k_ + (en - 1)] = value;
            value = field_.mul(value, alpha);
        }
    }
}

std::uint32_t PlacementScheme::coeff(int row, int en) const {
    if (row < 0 || row >= d_) {
        throw std::out_of_range("generator row " + std::to_string(row) + " outside [0, " +
                                std::to_string(d_) + ")");
    }
    if (en < 1 || en > k_) {
        throw std::out_of_range("EN index " + std::to_string(en) + " outside {1, ..., " +
                                std::to_string(k_) + "}");
    }
    return generator_[static_cast<std::size_t>(row) * k_ + (en - 1)];
}

std::vector<std::uint32_t> PlacementScheme::column(int en) const {
    std::vector<std::uint32_t> col(d_);
    for (int row = 0; row < d_; ++row) {
        col[row] = coeff(row, en);
    }
    return col;
}

int PlacementScheme::decodability_rank(const std::vector<int>& ens) const {
    const int cols = static_cast<int>(ens.size());
    std::vector<std::uint32_t> m(static_cast<std::size_t>(d_) * cols);
    for (int c = 0; c < cols; ++c) {
        const auto column_c = column(ens[c]);
        for (int r = 0; r < d_; ++r) {
            m[static_cast<std::size_t>(r) * cols + c] = column_c[r];
        }
    }
    // Gaussian elimination over GF(p).
    int rank = 0;
    for (int c = 0; c < cols && rank < d_; ++c) {
        int pivot = -1;
        for (int r = rank; r < d_; ++r) {
            if (m[static_cast<std::size_t>(r) * cols + c] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        for (int cc = 0; cc < cols; ++cc) {
            std::swap(m[static_cast<std::size_t>(rank) * cols + cc],
                      m[static_cast<std::size_t>(pivot) * cols + cc]);
        }
        const std::uint32_t scale = field_.inv(m[static_cast<std::size_t>(rank) * cols + c]);
        for (int cc = 0; cc < cols; ++cc) {
            auto& v = m[static_cast<std::size_t>(rank) * cols + cc];
            v = field_.mul(v, scale);
        }
        for (int r = 0; r < d_; ++r) {
            if (r == rank) continue;
            const std::uint32_t factor = m[static_cast<std::size_t>(r) * cols + c];
            if (factor == 0) continue;
            for (int cc = 0; cc < cols; ++cc) {
                auto& v = m[static_cast<std::size_t>(r) * cols + cc];
                v = field_.sub(v, field_.mul(factor, m[static_cast<std::size_t>(rank) * cols + cc]));
            }
        }
        ++rank;
    }
    return rank;
}

CacheContents::CacheContents(int k, int n_files, std::size_t symbols_per_subfile,
                             std::vector<CodedSubfile> store)
    : k_(k), n_files_(n_files), symbols_per_subfile_(symbols_per_subfile),
      store_(std::move(store)) {}

const CodedSubfile& CacheContents::at(int en, int file_id) const {
    if (en < 1 || en > k_) {
        throw std::out_of_range("EN index " + std::to_string(en) + " outside {1, ..., " +
                                std::to_string(k_) + "}");
    }
    if (file_id < 1 || file_id > n_files_) {
        throw std::out_of_range("file id " + std::to_string(file_id) + " outside {1, ..., " +
                                std::to_string(n_files_) + "}");
    }
    return store_[static_cast<std::size_t>(en - 1) * n_files_ + (file_id - 1)];
}

CacheContents encode(const PlacementScheme& scheme, const Library& lib) {
    if (scheme.field().p() <= 0xffff) {
        throw std::invalid_argument("field modulus " + std::to_string(scheme.field().p()) +
                                    " cannot carry 16-bit payload symbols: need p > 65535");
    }
    const PrimeField& gf = scheme.field();
    const int k = scheme.k();
    const int d = scheme.d();
    const int n = lib.n_files();

    std::vector<std::vector<std::uint32_t>> packed(n);
    for (int f = 1; f <= n; ++f) {
        packed[f - 1] = pack_symbols(lib.file(f), d);
    }
    const std::size_t positions = packed.front().size() / d;

    std::vector<CodedSubfile> store;
    store.reserve(static_cast<std::size_t>(k) * n);
    for (int en = 1; en <= k; ++en) {
        const auto col = scheme.column(en);
        for (int f = 1; f <= n; ++f) {
            CodedSubfile sub;
            sub.file_id = f;
            sub.en = en;
            sub.file_bytes = lib.file_bytes();
            sub.symbols.resize(positions);
            const auto& plain = packed[f - 1];
            for (std::size_t pos = 0; pos < positions; ++pos) {
                std::uint32_t acc = 0;
                for (int r = 0; r < d; ++r) {
                    acc = gf.add(acc, gf.mul(col[r], plain[pos * d + r]));
                }
                sub.symbols[pos] = acc;
            }
            store.push_back(std::move(sub));
        }
    }
    return CacheContents(k, n, positions, std::move(store));
}

std::vector<std::uint8_t> decode(const PlacementScheme& scheme, int file_id,
                                 const std::vector<CodedSubfile>& parts) {
    const int d = scheme.d();
    const PrimeField& gf = scheme.field();
    if (static_cast<int>(parts.size()) != d) {
        throw std::invalid_argument("decode needs exactly d=" + std::to_string(d) +
                                    " coded subfiles, got " + std::to_string(parts.size()));
    }
    std::set<int> ens;
    for (const auto& part : parts) {
        if (part.file_id != file_id) {
            throw std::invalid_argument("coded subfile of file " + std::to_string(part.file_id) +
                                        " mixed into decode of file " + std::to_string(file_id));
        }
        if (!ens.insert(part.en).second) {
            throw std::invalid_argument("duplicate coded subfile from EN " +
                                        std::to_string(part.en));
        }
        if (part.symbols.size() != parts.front().symbols.size() ||
            part.file_bytes != parts.front().file_bytes) {
            throw std::invalid_argument("coded subfiles disagree on payload geometry");
        }
    }

    // Invert the d x d matrix whose columns are the contributing generator
    // columns; row r of the inverse then recovers plain subfile symbol r.
    std::vector<std::uint32_t> a(static_cast<std::size_t>(d) * d);
    std::vector<std::uint32_t> inv(static_cast<std::size_t>(d) * d, 0);
    for (int c = 0; c < d; ++c) {
        const auto col = scheme.column(parts[c].en);
        for (int r = 0; r < d; ++r) {
            a[static_cast<std::size_t>(r) * d + c] = col[r];
        }
    }
    for (int i = 0; i < d; ++i) {
        inv[static_cast<std::size_t>(i) * d + i] = 1;
    }
    for (int col = 0; col < d; ++col) {
        int pivot = -1;
        for (int r = col; r < d; ++r) {
            if (a[static_cast<std::size_t>(r) * d + col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) {
            // Unreachable for a Vandermonde generator with distinct points.
            throw std::logic_error("singular decode system despite MDS generator");
        }
        for (int c = 0; c < d; ++c) {
            std::swap(a[static_cast<std::size_t>(col) * d + c],
                      a[static_cast<std::size_t>(pivot) * d + c]);
            std::swap(inv[static_cast<std::size_t>(col) * d + c],
                      inv[static_cast<std::size_t>(pivot) * d + c]);
        }
        const std::uint32_t scale = gf.inv(a[static_cast<std::size_t>(col) * d + col]);
        for (int c = 0; c < d; ++c) {
            auto& av = a[static_cast<std::size_t>(col) * d + c];
            av = gf.mul(av, scale);
            auto& iv = inv[static_cast<std::size_t>(col) * d + c];
            iv = gf.mul(iv, scale);
        }
        for (int r = 0; r < d; ++r) {
            if (r == col) continue;
            const std::uint32_t factor = a[static_cast<std::size_t>(r) * d + col];
            if (factor == 0) continue;
            for (int c = 0; c < d; ++c) {
                a[static_cast<std::size_t>(r) * d + c] =
                    gf.sub(a[static_cast<std::size_t>(r) * d + c],
                           gf.mul(factor, a[static_cast<std::size_t>(col) * d + c]));
                inv[static_cast<std::size_t>(r) * d + c] =
                    gf.sub(inv[static_cast<std::size_t>(r) * d + c],
                           gf.mul(factor, inv[static_cast<std::size_t>(col) * d + c]));
            }
        }
    }

    const std::size_t positions = parts.front().symbols.size();
    std::vector<std::uint32_t> plain(positions * d);
    for (std::size_t pos = 0; pos < positions; ++pos) {
        for (int r = 0; r < d; ++r) {
            std::uint32_t acc = 0;
            for (int c = 0; c < d; ++c) {
                acc = gf.add(acc, gf.mul(inv[static_cast<std::size_t>(r) * d + c],
                                         parts[c].symbols[pos]));
            }
            plain[pos * d + r] = acc;
        }
    }
    return unpack_bytes(plain, parts.front().file_bytes);
}

}  // namespace fran

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fran/prime_field.hpp"
#include "fran/topology.hpp"

namespace fran {

/// Equal-length file library. File ids are 1-based.
class Library {
public:
    /// Requires at least one file, all of identical length.
    explicit Library(std::vector<std::vector<std::uint8_t>> files);

    int n_files() const { return static_cast<int>(files_.size()); }
    std::size_t file_bytes() const { return files_.empty() ? 0 : files_.front().size(); }
    const std::vector<std::uint8_t>& file(int file_id) const;

private:
    std::vector<std::vector<std::uint8_t>> files_;
};

/// One EN's cached share of one file: the coded subfile produced by that
/// EN's generator column. Symbols live in the placement scheme's field.
struct CodedSubfile {
    int file_id = 0;
    int en = 0;
    std::size_t file_bytes = 0;  // original length, for stripping pad on decode
    std::vector<std::uint32_t> symbols;
};

/// MDS intra-file coded caching for a (K,d) regular network: every file is
/// split into d subfiles and expanded into K coded subfiles, one per EN, so
/// that any d of them recover the file. The generator is Vandermonde over
/// GF(p) with evaluation points 1..K; column i holds (1, i, i^2, ..., i^(d-1)).
///
/// Placement is demand-independent by construction: nothing here sees a
/// demand vector.
class PlacementScheme {
public:
    /// Requires field.p > K so the K evaluation points are distinct and
    /// nonzero; throws std::invalid_argument otherwise.
    PlacementScheme(const Topology& topology, PrimeField field);

    int k() const { return k_; }
    int d() const { return d_; }
    const PrimeField& field() const { return field_; }

    /// Generator entry for EN `en` (column) at exponent `row` in [0, d).
    std::uint32_t coeff(int row, int en) const;

    /// Generator column for EN `en`: d coefficients.
    std::vector<std::uint32_t> column(int en) const;

    /// Rank over GF(p) of the generator columns indexed by `ens`;
    /// min(|ens|, d) whenever the MDS invariant holds.
    int decodability_rank(const std::vector<int>& ens) const;

private:
    int k_;
    int d_;
    PrimeField field_;
    std::vector<std::uint32_t> generator_;  // row-major, d rows by k columns
};

/// Everything cached across the network: one coded subfile per (EN, file).
class CacheContents {
public:
    CacheContents(int k, int n_files, std::size_t symbols_per_subfile,
                  std::vector<CodedSubfile> store);

    const CodedSubfile& at(int en, int file_id) const;
    int k() const { return k_; }
    int n_files() const { return n_files_; }
    std::size_t symbols_per_subfile() const { return symbols_per_subfile_; }

private:
    int k_;
    int n_files_;
    std::size_t symbols_per_subfile_;
    std::vector<CodedSubfile> store_;  // (en-1) * n_files + (file_id-1)
};

/// Encodes the whole library into per-EN coded subfiles. Payload bytes are
/// packed big-endian two per symbol and zero-padded to a multiple of d
/// symbols, so each subfile carries ceil(F_sym/d) symbols. Requires the
/// field to cover 16-bit symbols (p > 65535).
CacheContents encode(const PlacementScheme& scheme, const Library& lib);

/// Recovers a file bit-exactly from exactly d coded subfiles held by
/// distinct ENs. Throws std::invalid_argument on a wrong part count,
/// duplicated ENs, or mixed file ids.
std::vector<std::uint8_t> decode(const PlacementScheme& scheme, int file_id,
                                 const std::vector<CodedSubfile>& parts);

}  // namespace fran

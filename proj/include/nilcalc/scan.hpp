/**
 * @file scan.hpp
 * @brief Empirical sharpness scan for the depth bound.
 *
 * The depth bound ceil((m+1)/r) is conjectured to be attained whenever the
 * leading non-constant coefficient c_r is nonzero; direct sums of Jordan
 * blocks of distinct sizes are the candidate failure mode. The scan draws
 * random coefficient vectors with c_r != 0 against both a full Jordan block
 * and random mixed direct sums, records whether the bound was attained, and
 * reports frequencies. Nothing is asserted here: the scan is an instrument.
 */
#ifndef NILCALC_SCAN_HPP
#define NILCALC_SCAN_HPP

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "nilcalc/depth.hpp"
#include "nilcalc/matrix.hpp"
#include "nilcalc/random_gen.hpp"

namespace nilcalc {

struct ScanRecord {
    std::size_t n;                         // largest Jordan block (= nilpotency index)
    std::size_t r;                         // requested contact order
    std::size_t trial;
    std::vector<std::size_t> block_sizes;  // Jordan structure of the probe matrix
    std::string coeffs_hash;               // stable fingerprint of the drawn coefficients
    std::size_t bound;
    std::size_t effective;
    bool sharp;
};

struct ScanSummaryRow {
    std::size_t n;
    std::size_t r;
    bool mixed_blocks;
    std::size_t trials;
    std::size_t sharp_count;
};

namespace detail {

inline std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string coeffs_fingerprint(const TruncSeries& f) {
    std::string flat;
    for (const auto& c : f.coeffs()) flat += c.str() + ",";
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(flat)));
    return std::string(buf);
}

/// Stable per-trial seed so records do not depend on evaluation order.
inline std::uint64_t mix_seed(std::uint64_t seed, std::size_t n, std::size_t r, std::size_t trial) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (n * 1000003ull + r * 1009ull + trial + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace detail

/// Run the scan over n in [n_lo, n_hi], r in [r_lo, r_hi], `trials` draws
/// each. Every (n, r, trial) yields a record for the full Jordan block and,
/// for n >= 2, one for a random direct sum whose largest block is n. Output
/// order and content are functions of the seed alone.
inline std::vector<ScanRecord> sharpness_scan(std::size_t n_lo, std::size_t n_hi, std::size_t r_lo,
                                              std::size_t r_hi, std::size_t trials,
                                              std::uint64_t seed) {
    std::vector<ScanRecord> records;
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
        for (std::size_t r = r_lo; r <= r_hi; ++r) {
            for (std::size_t trial = 0; trial < trials; ++trial) {
                RandomGen rng(detail::mix_seed(seed, n, r, trial));
                const std::size_t cap = std::max(n - 1, r);  // room for c_r even when r > m

                {
                    const TruncSeries f = rng.series_with_order(cap, r);
                    const DepthReport rep = analyze_depth(f, jordan_block(n));
                    records.push_back({n, r, trial, {n}, detail::coeffs_fingerprint(f), rep.bound,
                                       rep.effective_index, rep.sharp});
                }

                if (n >= 2) {
                    std::vector<std::size_t> blocks{n};
                    ExactMatrix probe = jordan_block(n);
                    const std::size_t extra = 1 + rng.below(2);
                    for (std::size_t b = 0; b < extra; ++b) {
                        const std::size_t size = 1 + rng.below(n - 1);  // strictly smaller block
                        blocks.push_back(size);
                        probe = direct_sum(probe, jordan_block(size));
                    }
                    const TruncSeries f = rng.series_with_order(cap, r);
                    const DepthReport rep = analyze_depth(f, probe);
                    records.push_back({n, r, trial, blocks, detail::coeffs_fingerprint(f),
                                       rep.bound, rep.effective_index, rep.sharp});
                }
            }
        }
    }
    return records;
}

/// Sharpness frequencies grouped by (n, r, single block vs mixed sum).
inline std::vector<ScanSummaryRow> summarize_scan(const std::vector<ScanRecord>& records) {
    std::map<std::tuple<std::size_t, std::size_t, bool>, ScanSummaryRow> rows;
    for (const auto& rec : records) {
        const bool mixed = rec.block_sizes.size() > 1;
        auto& row = rows
                        .try_emplace({rec.n, rec.r, mixed},
                                     ScanSummaryRow{rec.n, rec.r, mixed, 0, 0})
                        .first->second;
        ++row.trials;
        if (rec.sharp) ++row.sharp_count;
    }
    std::vector<ScanSummaryRow> out;
    out.reserve(rows.size());
    for (const auto& [key, row] : rows) out.push_back(row);
    return out;
}

}  // namespace nilcalc

#endif

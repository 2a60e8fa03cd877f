#ifndef CRAUT_REDUCTION_HPP
#define CRAUT_REDUCTION_HPP

#include <span>
#include <vector>

#include "craut/poly.hpp"
#include "craut/ranking.hpp"

namespace craut {

/// One reduction step of the certificate: coeff * theta applied to Q[q_index]
/// (or to bar(Q[q_index]) when barred is set).
struct CertEntry {
    size_t q_index;
    bool barred;
    DerivOp theta;
    GaussRat coeff;
};

struct ReduceResult {
    LinDiffPoly remainder;
    std::vector<CertEntry> certificate;
    /// Leaders eliminated along the run, in order; strictly rank-decreasing.
    std::vector<Derivative> rank_trace;
    /// Q contained a nonzero constant: the system is inconsistent and the
    /// remainder collapses to zero without a replayable certificate.
    bool constant_collapse = false;
};

/// Divisor set with precomputed leaders, initials, and bar copies, indexed
/// by leader indeterminate. Incremental: completion loops grow it in place
/// instead of re-barring the whole basis per reduction call.
class ReducerSet {
public:
    ReducerSet(const Ranking& r, bool extended) : ranking_(&r), extended_(extended) {}

    /// Appends q; zero polynomials are ignored, constants set the
    /// inconsistency flag. Returns the q_index divisors receive.
    size_t add(const LinDiffPoly& q);

    bool extended() const { return extended_; }
    bool constant_present() const { return constant_present_; }
    size_t size() const { return count_; }
    const Ranking& ranking() const { return *ranking_; }

    struct Entry {
        LinDiffPoly poly;  // q or bar(q), as subtracted
        size_t q_index;
        bool barred;
        Derivative ld;
        GaussRat lc;
    };

    static constexpr size_t no_exclusion = static_cast<size_t>(-1);

    /// First entry (in pass order: unbarred then barred, insertion order
    /// within a pass) whose leader divides d; nullptr when none. Entries of
    /// divisor exclude_q are skipped (self-avoidance in autoreduction).
    const Entry* find(const Derivative& d, size_t exclude_q = no_exclusion) const;
    /// True when some leader divides d.
    bool reducible(const Derivative& d) const;

private:
    const Ranking* ranking_;
    bool extended_;
    bool constant_present_ = false;
    size_t count_ = 0;
    std::vector<Entry> entries_;
    // entries_ positions bucketed by leader indeterminate, per pass.
    std::vector<std::vector<size_t>> plain_by_indet_;
    std::vector<std::vector<size_t>> barred_by_indet_;

    void index_entry(size_t pos);
};

/// p = sum coeff*theta(q) + remainder; no term of the remainder is a
/// derivative of rank(q) for any q in Q. Zero polynomials in Q are ignored.
ReduceResult ritt_reduce(const LinDiffPoly& p, std::span<const LinDiffPoly> Q, const Ranking& r);

/// As ritt_reduce, with bar(q) admitted as reducers: no term of the remainder
/// is a derivative of rank(q) or rank(bar q) for any q in Q.
ReduceResult extended_ritt_reduce(const LinDiffPoly& p, std::span<const LinDiffPoly> Q,
                                  const Ranking& r);

/// Core loop over a prebuilt divisor index; exclude_q skips one divisor.
ReduceResult reduce_with(const LinDiffPoly& p, const ReducerSet& divisors,
                         size_t exclude_q = ReducerSet::no_exclusion);

/// Reconstructs sum coeff * theta (q or bar q) for certificate validation.
LinDiffPoly replay_certificate(std::span<const CertEntry> cert, std::span<const LinDiffPoly> Q);

/// True when no term of p is a derivative of any rank(q) (nor rank(bar q)
/// with extended set).
bool is_reduced_against(const LinDiffPoly& p, std::span<const LinDiffPoly> Q, const Ranking& r,
                        bool extended);

}  // namespace craut

#endif

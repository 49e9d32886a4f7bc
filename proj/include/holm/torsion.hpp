#pragma once

#include <optional>
#include <string>
#include <vector>

#include "holm/curves.hpp"
#include "holm/exact_arith.hpp"

namespace holm {

enum class Verdict { Confirmed, Violated };
enum class Relation { Equals, AtMost };

std::string to_string(Verdict v);
std::string to_string(Relation r);

/// Outcome of checking one lemma instance on one integral point.
///
/// Lemma 1 valuates x(2P) at 2 and requires 8P to be non-integral. Lemma 2
/// valuates x(3P) at q and, for q = 3, requires 3P to be non-integral.
/// Lemma 3 valuates x(3qP) at q.
struct LemmaReport {
    int lemma_id = 0;
    EPoint point = EPoint::infinity();
    Integer prime;
    long long valuation_multiple = 0;  // m with v_q(x(mP)) observed
    long long multiple_used = 0;       // witness multiple: 8, 3 or 3q
    /// nullopt when valuation_multiple * P is INFINITY (a torsion point).
    std::optional<Valuation> observed_valuation;
    Relation relation = Relation::Equals;
    long claimed = 0;
    EPoint witness = EPoint::infinity();  // multiple_used * P
    /// Whether the witness multiple is non-integral; nullopt when the lemma
    /// makes no such claim (Lemma 2 with q != 3).
    std::optional<bool> witness_non_integral;
    std::vector<std::string> notes;
    Verdict verdict = Verdict::Violated;
};

/// Lemma 1: 2 | kl. Throws ValidationError for a non-Holm curve, 2 not
/// dividing kl, or P not an integral point of the curve.
LemmaReport lemma1_check(const WeierstrassCurve& curve, const EPoint& p);

/// Lemma 2: q an odd prime dividing kl. x(3P) is cross-checked against the
/// closed-form tripling formula (ConsistencyError on disagreement).
LemmaReport lemma2_check(const WeierstrassCurve& curve, const EPoint& p, const Integer& q);

/// Lemma 3: q >= 5 prime dividing kl. When `cross_check` is set, the scaled
/// division-polynomial tails for n = q at x(3P) are also evaluated and must be
/// integers divisible by k^2 l^2 (ContradictionError otherwise).
LemmaReport lemma3_check(const WeierstrassCurve& curve, const EPoint& p, const Integer& q,
                         bool cross_check = true);

/// Every integral point (x, y) with y = 0 or y^2 | disc, disc = -16(4a^3 + 27b^2),
/// sorted by (x, y). Throws CapacityError if factoring disc exceeds `ceiling`.
std::vector<EPoint> nagell_lutz_candidates(const WeierstrassCurve& curve,
                                           std::uint64_t ceiling = kDefaultTrialCeiling);

/// Lemma used for a given (k, l): 1 if 2 | kl, else 2 (with q = 3) if
/// 3 | kl, else 3 with the smallest prime q >= 5 dividing kl.
struct Dispatch {
    int lemma_id = 0;
    Integer prime;
};
Dispatch dispatch_lemma(const HolmParams& params);

/// Run the lemma chosen by the dispatch rule on one integral point.
LemmaReport run_dispatched(const WeierstrassCurve& curve, const Dispatch& dispatch,
                           const EPoint& p);

struct CandidateEvidence {
    EPoint point = EPoint::infinity();
    LemmaReport report;
    std::optional<int> order;  // order_upto result, nullopt when no order <= max_order
    std::vector<std::string> findings;
    bool has_valid_witness = false;
};

enum class Conclusion { TorsionFreeConfirmed, CounterexampleFound };
std::string to_string(Conclusion c);

struct TorsionCertificate {
    HolmParams params;
    WeierstrassCurve curve;
    Integer discriminant;
    int max_order = 12;
    std::vector<CandidateEvidence> candidates;
    Conclusion conclusion = Conclusion::CounterexampleFound;
};

/// Enumerates Nagell-Lutz candidates and gives each a non-integral multiple via
/// the dispatched lemma, cross-checked by an independent order scan up to
/// `max_order`. Candidates are processed by up to `workers` threads; the
/// result is the same for any worker count.
TorsionCertificate certify_torsion_free(const HolmParams& params, int max_order = 12,
                                        unsigned workers = 1);

}  // namespace holm

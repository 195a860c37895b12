#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mldelab/lattice.hpp"
#include "mldelab/mlde.hpp"
#include "mldelab/qseries.hpp"

namespace mldelab {

enum class Verdict {
    character_type,
    rejected_nonintegral,
    rejected_logarithmic,
    rejected_nonrational_roots,
    rejected_negative,
};

std::string verdict_name(Verdict v);

/// One row of a classification search. Emitted in a deterministic order;
/// the verdict is reproducible from the stored data.
struct CandidateRecord {
    std::string pipeline;
    std::map<std::string, Rational> params;
    std::optional<IndicialData> indicial;
    std::vector<std::vector<Rational>> leading_data;   // first coefficients per solution
    Verdict verdict = Verdict::character_type;
    std::string notes;
};

/// c = 8 generic case (hypothesis m != 248): derives (P, Q) = (-1/6, 1/27)
/// from the vacuum ansatz, identifies the solutions in the weight-4 basis as
/// {x^2, xy, y^2}, and emits the sqrt(2)E8 / D8 / orbifold records plus the
/// h = -1/2 (D20) and h = -1/3 special-equation records.
struct C8GenericResult {
    Rational P, Q;
    std::vector<std::string> basis_identification;   // labels for f1, f2, f3
    std::vector<CandidateRecord> records;
};
C8GenericResult c8_generic_pipeline(long terms);

/// c = 8 exceptional family (m = 248): scans the one-parameter family
/// x = -(6n^2 - 9n + 4)/6 over n = 1..n_max, filtering on the second
/// coefficient of the solution at the smallest root. Survivors are {1, 2}.
struct C8ExceptionalResult {
    std::vector<long> survivors;
    std::vector<CandidateRecord> records;
    bool cascade_verified = false;   // m2=4124 forces (31+6x)(m3-34752)=0, etc.
};
C8ExceptionalResult c8_exceptional_scan(long n_max, long terms);

/// Second coefficient of the c = 16 solution at root h - 2/3:
/// b1 = 8(60h^3 - 277h^2 + 437h - 186)/((h+1)(4h-3)).
/// DegenerateHError at h = -1, 3/4 (the logarithmic fixtures).
Rational c16_b1(const Rational& h);

/// The c = 16 Diophantine scan at a fixed positive integer y:
/// enumerate factorizations (49n - 30360y - 7d)(49n - 30360y + 7d) =
/// -44236800 y^2, recover n and d, solve 4n h^2 + (n - 4440y) h -
/// 3(n - 1080y) = 0 for rational h. The stages keep the raw n/y values
/// (the printed 35-element display), all h candidates, the subset where
/// y*b1 is a non-negative integer (19 elements at y = 16), and the
/// mu-closed subset (8 elements).
struct C16Candidates {
    long y;
    std::vector<Rational> raw_ny;      // n/y for each admissible factor pair
    std::vector<Rational> h_all;       // rational h from the quadratic
    std::vector<Rational> h_integral;  // y*b1 a non-negative integer
    std::vector<Rational> h_symmetric; // closed under h -> 5/2 - h
};
C16Candidates c16_h_candidates(long y);

/// Appendix-1 closed form of the fourth coefficient of f2 as a function of
/// h, with poles at {-4,-3,-2,-1,-3/4,-1/4,1/4,3/4}.
Rational appendix1_a4(const Rational& h);

/// Final c = 16 filter: documents how each element of the 8-element set is
/// resolved (mu-duplicates, the h = -1/4 rejection, the three survivors) and
/// emits the Lambda16 / D16 / D28 records for h = 1, 2, 3.
struct C16FinalResult {
    std::vector<long> surviving_h;                  // {1, 2, 3}
    std::vector<CandidateRecord> records;           // survivors with triples
    std::vector<std::pair<Rational, std::string>> eliminated;   // (h, reason)
};
C16FinalResult c16_final_filter(long terms);

/// The two logarithmic fixtures at (16, -1) and (16, 3/4).
std::vector<CandidateRecord> c16_logarithmic_fixtures(long terms);

/// Appendix 2 search for c = 4: the 210-element m2 list from factor pairs of
/// (2054+d-m2)(2054-d-m2) = 2^8 3^4 5^2 7, the 133-element m1 list, and the
/// six surviving rows with rational indicial roots.
struct C4SearchResult {
    std::vector<Integer> m2_list;   // 210 values, ascending
    std::vector<Integer> m1_list;   // 133 values, ascending
    struct Row {
        long m1;
        Integer m2;
        Rational x, y;
        std::array<Rational, 3> indices;
    };
    std::vector<Row> final_rows;    // m1 in {16, 24, 28, 156, 178, 271}
};
C4SearchResult c4_search();

/// Verify one of the six c = 4 cases against its printed closed forms and
/// assign the verdict.
CandidateRecord c4_case_verify(long m1, long terms);

} // namespace mldelab

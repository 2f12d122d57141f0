#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "seifertkit/abelian.hpp"
#include "seifertkit/exactalg.hpp"
#include "seifertkit/families.hpp"
#include "seifertkit/laurent.hpp"

namespace seifertkit {

enum class Verdict { Obstructed, Inconclusive };

std::string to_string(Verdict v);

struct Reason {
    std::string tag;
    std::string message;
};

// Reason tags, in the order the checks run.
inline constexpr const char *kReasonDetNotSquare = "det-not-square";
inline constexpr const char *kReasonNotAlgSlice = "not-algebraically-slice";
inline constexpr const char *kReasonH1NotCyclic = "h1-not-cyclic";
inline constexpr const char *kReasonTrotterCongruence = "trotter-no-congruence";
inline constexpr const char *kReasonUniqueSurface = "unique-surface-nontrivial-alexander";

/// Outcome of the cosmetic-crossing obstruction checks for one genus-one knot.
///
/// Fields that need a Seifert matrix are empty for catalog entries analyzed
/// from their determinant alone.
struct ObstructionReport {
    KnotSpec input;
    std::optional<SeifertMatrix> seifert;
    std::optional<LaurentPoly> alexander; // canonical representative
    Integer determinant;
    bool det_square = false;
    std::optional<bool> alg_slice;
    std::optional<MetabolizerForm> metab;
    std::optional<AbelianGroup> h1;
    std::optional<bool> h1_cyclic;
    std::optional<Integer> gcd_value; // gcd(2a, 2b+1) of the metabolizer form
    bool trotter_applicable = false;
    bool congruence_blocked = false;
    bool unique_surface_asserted = false;
    Verdict verdict = Verdict::Inconclusive;
    std::vector<Reason> reasons;
    std::vector<std::string> notes;

    bool has_reason(const std::string &tag) const;
};

struct CatalogEntry {
    std::string name;
    Integer determinant;
    std::optional<KnotSpec> realization;
    bool known_square = false;
    std::optional<std::string> settled_by; // result outside this library that rules the knot out
};

/// The 23 genus-one knots with at most 12 crossings, with their determinants.
const std::vector<CatalogEntry> &catalog();

/// Lookup ignoring case and underscores ("9_46", "11n139"). Throws InputError if absent.
const CatalogEntry &find_catalog_entry(const std::string &name);

/// Runs every check that applies and collects all reasons:
///  1. det(K) is not a perfect square;
///  2. the Seifert form has no isotropic vector (not algebraically slice);
///  3. H_1 of the double branched cover is not finite cyclic;
///  4. |det V| is 1 or prime, so S-equivalence is congruence, and neither
///     ((a+-1, b), (b+1, 0)) is congruent to the metabolizer form;
///  5. a unique minimal-genus surface is asserted and Delta is not 1.
/// Throws InputError when the spec does not resolve to a 2x2 Seifert matrix
/// (catalog entries without one get the determinant check only).
ObstructionReport analyze(const KnotSpec &spec, bool unique_surface = false);

struct TableScreen {
    std::vector<std::string> survivors; // square determinant
    std::vector<ObstructionReport> reports; // catalog order
};

TableScreen run_table_screen();

nlohmann::json to_json(const Integer &x);
nlohmann::json to_json(const IntMatrix &m);
nlohmann::json to_json(const LaurentPoly &p);
nlohmann::json to_json(const AbelianGroup &g);
nlohmann::json to_json(const ObstructionReport &r);

std::string report_text(const ObstructionReport &r);

} // namespace seifertkit

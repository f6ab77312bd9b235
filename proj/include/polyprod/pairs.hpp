#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyprod/homology.hpp"

namespace polyprod {

enum class PairKind { MomentAngle, Real, General };

const char* pair_kind_name(PairKind k);

/* What the decomposition machinery needs to know about one coordinate pair
 * (CA_i, A_i): the reduced homology of A_i when known, and two attestations
 * used as rewrite/inference hypotheses.
 *
 *   is_suspension   A_i is homotopy equivalent to a suspension
 *   sigma_in_w      the suspension of A_i is a wedge of spheres
 *
 * Both flags are inputs, not conclusions; certificates list them as
 * attestations whenever a rule consumes them.
 */
struct PairAtom {
    std::string name;
    std::optional<HomologyProfile> profile;
    bool is_suspension = false;
    bool sigma_in_w = false;
};

class PairClass {
public:
    static PairClass moment_angle(int m);  // (D^2, S^1) in every coordinate
    static PairClass real(int m);          // (D^1, S^0) in every coordinate
    static PairClass general(std::vector<PairAtom> atoms);

    PairKind kind() const { return kind_; }
    int size() const { return static_cast<int>(atoms_.size()); }
    const PairAtom& atom(int i) const;  // 1-based, matching vertex labels
    const std::vector<PairAtom>& atoms() const { return atoms_; }

    bool all_sigma_in_w() const;
    bool all_suspensions() const;

    // pair class seen by a full subcomplex: vertex_map[i-1] is the original
    // label of new vertex i (the vertex_map of Subcomplex)
    PairClass restricted(const std::vector<int>& vertex_map) const;

    bool operator==(const PairClass& o) const;

private:
    PairKind kind_ = PairKind::General;
    std::vector<PairAtom> atoms_;
};

}  // namespace polyprod

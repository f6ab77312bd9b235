#include "polyprod/pairs.hpp"

#include <stdexcept>

namespace polyprod {

const char* pair_kind_name(PairKind k) {
    switch (k) {
        case PairKind::MomentAngle: return "moment-angle";
        case PairKind::Real: return "real";
        case PairKind::General: return "general";
    }
    return "unknown";
}

PairClass PairClass::moment_angle(int m) {
    if (m < 0) throw std::invalid_argument("pair class needs m >= 0");
    PairClass p;
    p.kind_ = PairKind::MomentAngle;
    // S^1 = Sigma S^0, and Sigma S^1 = S^2 is a wedge of spheres
    p.atoms_.assign(static_cast<std::size_t>(m),
                    PairAtom{"S^1", HomologyProfile::sphere(1), true, true});
    return p;
}

PairClass PairClass::real(int m) {
    if (m < 0) throw std::invalid_argument("pair class needs m >= 0");
    PairClass p;
    p.kind_ = PairKind::Real;
    // S^0 is not a suspension, but Sigma S^0 = S^1 is a wedge of spheres
    p.atoms_.assign(static_cast<std::size_t>(m),
                    PairAtom{"S^0", HomologyProfile::sphere(0), false, true});
    return p;
}

PairClass PairClass::general(std::vector<PairAtom> atoms) {
    PairClass p;
    p.kind_ = PairKind::General;
    p.atoms_ = std::move(atoms);
    return p;
}

const PairAtom& PairClass::atom(int i) const {
    if (i < 1 || i > size()) throw std::invalid_argument("pair atom index out of range");
    return atoms_[static_cast<std::size_t>(i - 1)];
}

bool PairClass::all_sigma_in_w() const {
    for (const auto& a : atoms_)
        if (!a.sigma_in_w) return false;
    return true;
}

bool PairClass::all_suspensions() const {
    for (const auto& a : atoms_)
        if (!a.is_suspension) return false;
    return true;
}

PairClass PairClass::restricted(const std::vector<int>& vertex_map) const {
    PairClass p;
    p.kind_ = kind_;
    p.atoms_.reserve(vertex_map.size());
    for (int original : vertex_map) p.atoms_.push_back(atom(original));
    return p;
}

bool PairClass::operator==(const PairClass& o) const {
    if (kind_ != o.kind_ || atoms_.size() != o.atoms_.size()) return false;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        const PairAtom& a = atoms_[i];
        const PairAtom& b = o.atoms_[i];
        if (a.name != b.name || a.is_suspension != b.is_suspension ||
            a.sigma_in_w != b.sigma_in_w)
            return false;
        if (a.profile.has_value() != b.profile.has_value()) return false;
        if (a.profile && !(*a.profile == *b.profile)) return false;
    }
    return true;
}

}  // namespace polyprod

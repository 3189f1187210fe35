#include "orbtop/curve_system.hpp"

#include "orbtop/errors.hpp"

namespace orbtop {

namespace {
std::string c_name(int i, bool primed) {
    return "C" + std::to_string(i) + (primed ? "'" : "");
}
}  // namespace

CurveSystem::CurveSystem() {
    for (int i = 1; i <= 9; ++i) names_.push_back(c_name(i, false));
    for (int i = 1; i <= 9; ++i) names_.push_back(c_name(i, true));
    for (int j = 1; j <= 3; ++j) names_.push_back("E" + std::to_string(j));
    names_.insert(names_.end(), {"F", "D", "T", "D'", "T'"});

    // Two 9-cycles of (-2)-spheres.
    for (bool primed : {false, true})
        for (int i = 1; i <= 9; ++i) {
            set(c_name(i, primed), c_name(i, primed), -2);
            set(c_name(i, primed), c_name(i % 9 + 1, primed), 1);
        }
    // Glued sections: E_j meets C_{3j-2} on both sides and each fiber once.
    for (int j = 1; j <= 3; ++j) {
        std::string e = "E" + std::to_string(j);
        set(e, e, -2);
        set(e, c_name(3 * j - 2, false), 1);
        set(e, c_name(3 * j - 2, true), 1);
        set(e, "F", 1);
    }
    set("F", "F", 0);
    // Sphere/torus pairs living near two fibers of the sum region.
    set("D", "D", -2);
    set("T", "T", 0);
    set("D", "T", 1);
    set("D'", "D'", -2);
    set("T'", "T'", 0);
    set("D'", "T'", 1);
}

void CurveSystem::set(const std::string& a, const std::string& b, long value) {
    table_[{a, b}] = Rat(value);
    table_[{b, a}] = Rat(value);
}

bool CurveSystem::has(const std::string& name) const {
    for (const auto& n : names_)
        if (n == name) return true;
    return false;
}

Rat CurveSystem::pairing(const std::string& a, const std::string& b) const {
    if (!has(a)) throw InvalidParams("unknown curve '" + a + "'");
    if (!has(b)) throw InvalidParams("unknown curve '" + b + "'");
    auto it = table_.find({a, b});
    return it == table_.end() ? Rat(0) : it->second;
}

Rat CurveSystem::pairing(const DivisorClass& a, const DivisorClass& b) const {
    Rat acc(0);
    for (const auto& [na, ca] : a)
        for (const auto& [nb, cb] : b) acc += ca * cb * pairing(na, nb);
    return acc;
}

std::vector<std::string> CurveSystem::contraction_chain() const {
    std::vector<std::string> chain;
    for (int i = 8; i >= 1; --i) chain.push_back(c_name(i, false));
    chain.push_back("E1");
    for (int i = 1; i <= 8; ++i) chain.push_back(c_name(i, true));
    return chain;
}

HJChain CurveSystem::contraction_chain_data() const {
    HJChain chain;
    for (const auto& name : contraction_chain()) {
        Rat sq = pairing(name, name);
        chain.coeffs.push_back(-rat_num(sq));
    }
    return chain;
}

}  // namespace orbtop

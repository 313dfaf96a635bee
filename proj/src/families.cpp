// SPDX-License-Identifier: Apache-2.0
#include "hexlat/families.hpp"

#include <map>

#include "hexlat/errors.hpp"

namespace hexlat {

namespace {

struct FamilyInfo {
    Family family;
    const char* name;
    char letter;
    bool face;
    ParamDomain domain;
    int epsilon;  // -1 unless the family carries an epsilon subscript
};

constexpr FamilyInfo kInfo[] = {
    {Family::A3d1, "A3:d=1", 'A', true, ParamDomain::Hyperbolic, -1},
    {Family::A3d0, "A3:d=0", 'A', true, ParamDomain::Hyperbolic, -1},
    {Family::A2_11, "A2:1,1", 'A', true, ParamDomain::Additive, -1},
    {Family::A2_10, "A2:1,0", 'A', true, ParamDomain::Additive, -1},
    {Family::A2_00, "A2:0,0", 'A', true, ParamDomain::Additive, -1},
    {Family::A4, "A4", 'A', true, ParamDomain::Elliptic, -1},
    {Family::C3_hh0, "C3:1/2,1/2,0", 'C', true, ParamDomain::Hyperbolic, -1},
    {Family::C3_h0h, "C3:1/2,0,1/2", 'C', true, ParamDomain::Hyperbolic, -1},
    {Family::C3_100, "C3:1,0,0", 'C', true, ParamDomain::Hyperbolic, -1},
    {Family::C3_000, "C3:0,0,0", 'C', true, ParamDomain::Hyperbolic, -1},
    {Family::C2_110, "C2:1,1,0", 'C', true, ParamDomain::Additive, -1},
    {Family::C2_101, "C2:1,0,1", 'C', true, ParamDomain::Additive, -1},
    {Family::C2_100, "C2:1,0,0", 'C', true, ParamDomain::Additive, -1},
    {Family::C2_000, "C2:0,0,0", 'C', true, ParamDomain::Additive, -1},
    {Family::C1_1, "C1:d=1", 'C', true, ParamDomain::Additive, -1},
    {Family::C1_0, "C1:d=0", 'C', true, ParamDomain::Additive, -1},
    {Family::Q4, "Q4", 'Q', false, ParamDomain::Elliptic, -1},
    {Family::Q3d1, "Q3:d=1", 'Q', false, ParamDomain::Hyperbolic, -1},
    {Family::Q3d0, "Q3:d=0", 'Q', false, ParamDomain::Hyperbolic, -1},
    {Family::Q2, "Q2", 'Q', false, ParamDomain::Additive, -1},
    {Family::Q1d1, "Q1:d=1", 'Q', false, ParamDomain::Additive, -1},
    {Family::Q1d0, "Q1:d=0", 'Q', false, ParamDomain::Additive, -1},
    {Family::H3_11, "H3:1,1", 'H', false, ParamDomain::Hyperbolic, 1},
    {Family::H3_10, "H3:1,0", 'H', false, ParamDomain::Hyperbolic, 0},
    {Family::H3_00, "H3:0,0", 'H', false, ParamDomain::Hyperbolic, 0},
    {Family::H2_1, "H2:e=1", 'H', false, ParamDomain::Additive, 1},
    {Family::H2_0, "H2:e=0", 'H', false, ParamDomain::Additive, 0},
    {Family::H1_1, "H1:e=1", 'H', false, ParamDomain::Additive, 1},
    {Family::H1_0, "H1:e=0", 'H', false, ParamDomain::Additive, 0},
};

const FamilyInfo& info(Family f) {
    for (const auto& fi : kInfo)
        if (fi.family == f) return fi;
    throw UnknownRow("family out of range");
}

}  // namespace

const std::array<Family, 16>& face_families() {
    static const std::array<Family, 16> v = {
        Family::A3d1,   Family::A3d0,   Family::A2_11,  Family::A2_10,
        Family::A2_00,  Family::A4,     Family::C3_hh0, Family::C3_h0h,
        Family::C3_100, Family::C3_000, Family::C2_110, Family::C2_101,
        Family::C2_100, Family::C2_000, Family::C1_1,   Family::C1_0,
    };
    return v;
}

const std::array<Family, 13>& quad_families() {
    static const std::array<Family, 13> v = {
        Family::Q4,    Family::Q3d1,  Family::Q3d0,  Family::Q2,   Family::Q1d1,
        Family::Q1d0,  Family::H3_11, Family::H3_10, Family::H3_00, Family::H2_1,
        Family::H2_0,  Family::H1_1,  Family::H1_0,
    };
    return v;
}

std::string family_name(Family f) { return info(f).name; }

Family family_parse(const std::string& name) {
    for (const auto& fi : kInfo)
        if (name == fi.name) return fi.family;
    throw UnknownRow("unknown family name '" + name + "'");
}

ParamDomain family_domain(Family f) { return info(f).domain; }
bool family_is_face(Family f) { return info(f).face; }
char family_letter(Family f) { return info(f).letter; }
int family_epsilon(Family f) { return info(f).epsilon; }

Family quad_partner_of_a(Family a_face) {
    switch (a_face) {
        case Family::A3d1: return Family::Q3d1;
        case Family::A3d0: return Family::Q3d0;
        case Family::A2_11: return Family::Q2;
        case Family::A2_10: return Family::Q1d1;
        case Family::A2_00: return Family::Q1d0;
        case Family::A4: return Family::Q4;
        default: throw UnsupportedFamily("quad_partner_of_a: not a type-A face family");
    }
}

std::string EquationSpec::to_string() const {
    std::string s = family_name(family);
    if (swap_ab_cd) s += ";swap";
    return s;
}

EquationSpec EquationSpec::parse(const std::string& text) {
    EquationSpec spec;
    std::string base = text;
    auto semi = text.find(';');
    if (semi != std::string::npos) {
        std::string flag = text.substr(semi + 1);
        if (flag != "swap") throw UnknownRow("unknown equation flag '" + flag + "'");
        spec.swap_ab_cd = true;
        base = text.substr(0, semi);
    }
    spec.family = family_parse(base);
    return spec;
}

}  // namespace hexlat

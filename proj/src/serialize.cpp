#include "parmod/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace parmod {

std::string format_real(double x) {
    if (x == 0.0) return "0";   // covers -0 so output has one spelling of zero
    char buf[40];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, x);
        if (std::strtod(buf, nullptr) == x) break;
    }
    return buf;
}

std::string format_proj(const ProjPoint& p) {
    if (p.is_inf()) return "inf";
    const double re = p.value().real();
    const double im = p.value().imag();
    std::string s = format_real(re);
    s += std::signbit(im) && im != 0.0 ? "-" : "+";
    s += format_real(std::abs(im));
    s += "i";
    return s;
}

json json_of(cplx z) { return json::array({z.real(), z.imag()}); }

cplx cplx_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw Error("complex JSON must be a 2-array [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

json json_of(const ProjPoint& p) {
    if (p.is_inf()) return json{{"inf", true}};
    return json{{"re", p.value().real()}, {"im", p.value().imag()}};
}

ProjPoint proj_from_json(const json& j) {
    if (!j.is_object())
        throw Error("CP^1 JSON must be {\"inf\": true} or {\"re\", \"im\"}");
    if (j.contains("inf")) {
        if (j["inf"].get<bool>()) return ProjPoint::infinity();
        throw Error("CP^1 JSON: \"inf\" must be true when present");
    }
    if (!j.contains("re") || !j.contains("im"))
        throw Error("CP^1 JSON must contain \"re\" and \"im\"");
    return ProjPoint(cplx(j["re"].get<double>(), j["im"].get<double>()));
}

json json_of(const BundleClass& E) {
    switch (E.kind()) {
        case BundleKind::SplitGeneric:
            return json{{"kind", "split_generic"}, {"lambda", json_of(E.lam().z)}};
        case BundleKind::SplitTorsion:
            return json{{"kind", "split_torsion"}, {"index", E.torsion_index()}};
        case BundleKind::NonSplit:
            return json{{"kind", "nonsplit"}, {"index", E.torsion_index()}};
    }
    throw Error("json_of(BundleClass): unreachable");
}

BundleClass bundle_from_json(const LatticeTau& lat, const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "split_generic")
        return BundleClass::split_generic(
            lat, TorusPoint{cplx_from_json(j.at("lambda"))});
    if (kind == "split_torsion")
        return BundleClass::split_torsion(lat, j.at("index").get<int>());
    if (kind == "nonsplit")
        return BundleClass::nonsplit(lat, j.at("index").get<int>());
    throw Error("bundle JSON: unknown kind \"" + kind + "\"");
}

json json_of(const ParabolicBundle& pb) {
    json marks = json::array();
    for (const auto& mk : pb.marks())
        marks.push_back(
            json{{"at", json_of(mk.at.z)}, {"coord", json_of(mk.coord)}});
    return json{{"bundle", json_of(pb.bundle())},
                {"marks", marks},
                {"weight", pb.weight()}};
}

ParabolicBundle parabolic_from_json(const LatticeTau& lat, const json& j) {
    const BundleClass E = bundle_from_json(lat, j.at("bundle"));
    std::vector<MarkedLine> marks;
    for (const json& mj : j.at("marks"))
        marks.push_back(MarkedLine{
            reduce_mod_lattice(lat, cplx_from_json(mj.at("at"))),
            proj_from_json(mj.at("coord"))});
    const double weight = j.contains("weight") ? j["weight"].get<double>() : 0.25;
    return ParabolicBundle(lat, E, std::move(marks), weight);
}

json json_of(const ModuliTriple& t) {
    return json::array({json_of(t.c1), json_of(t.c2), json_of(t.c3)});
}

ModuliTriple triple_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3)
        throw Error("triple JSON must be a 3-array of CP^1 points");
    return {proj_from_json(j[0]), proj_from_json(j[1]), proj_from_json(j[2])};
}

std::string curve_csv_row(const TorusPoint& lam, const ModuliTriple& t) {
    std::string row = format_real(lam.z.real());
    row += ",";
    row += format_real(lam.z.imag());
    for (const ProjPoint* c : {&t.c1, &t.c2, &t.c3}) {
        row += ",";
        row += format_proj(*c);
    }
    return row;
}

cplx parse_complex(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw Error("parse_complex: empty input");

    const auto parse_real = [](const std::string& part) -> double {
        if (part.empty() || part == "+") return 1.0;
        if (part == "-") return -1.0;
        char* end = nullptr;
        const double v = std::strtod(part.c_str(), &end);
        if (end != part.c_str() + part.size())
            throw Error("parse_complex: malformed number \"" + part + "\"");
        return v;
    };

    const char tail = s.back();
    if (tail != 'i' && tail != 'j') return {parse_real(s), 0.0};

    const std::string body = s.substr(0, s.size() - 1);
    // Split at the last sign that is not an exponent sign and not leading.
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') &&
            body[k - 1] != 'e' && body[k - 1] != 'E') {
            return {parse_real(body.substr(0, k)), parse_real(body.substr(k))};
        }
    }
    return {0.0, parse_real(body)};
}

}  // namespace parmod

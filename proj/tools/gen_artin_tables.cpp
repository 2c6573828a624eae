// gen_artin_tables: writes the sample inputs under a data directory.
//
//   gen_artin_tables [dir] [bound]

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <json.hpp>

#include "artin/io/json_io.hpp"
#include "artin/recover/synthetic.hpp"

namespace {

using namespace artin;
using json = nlohmann::json;

void write_text(const std::filesystem::path& p, const std::string& text) {
    std::ofstream f(p, std::ios::binary);
    if (!f) throw invalid_input("cannot write " + p.string());
    f << text;
}

json field_json(const recover::SyntheticArtin& s) {
    json j;
    j["field"] = json::array();
    for (const auto& c : s.K->defining_poly()) j["field"].push_back(c.str());
    j["label"] = s.K->label();
    return j;
}

// Hecke coefficients a_k = (-1)^k c_k from det(1 - rho T) = sum c_k T^k.
satake::SatakeSystem to_satake(const recover::SyntheticArtin& s, const arith::Int& N, bool as_parameters) {
    satake::SatakeSystem S(s.n, N, s.K);
    for (const auto& [p, coeffs] : s.truth) {
        auto alg = [&](const recover::Coords& c, bool neg) {
            std::vector<arith::Rational> r;
            for (const auto& x : c) r.emplace_back(neg ? arith::Int(-x) : x);
            return arith::AlgebraicNumber(s.K, r);
        };
        if (as_parameters && s.n == 1) {
            S.add_parameters(p, {alg(coeffs[1], true)});
            continue;
        }
        std::vector<arith::AlgebraicNumber> a;
        for (std::size_t k = 1; k < coeffs.size(); ++k) a.push_back(alg(coeffs[k], k % 2 == 1));
        S.add_coefficients(p, a);
    }
    return S;
}

void emit_table(const std::filesystem::path& dir, const std::string& name, const recover::ModLFrobTable& t) {
    std::ofstream f(dir / name, std::ios::binary);
    io::write_table(f, t);
}

void emit_group(const std::filesystem::path& dir, const std::string& name, const matgroup::FiniteMatrixGroup& G) {
    write_text(dir / name, io::group_json(G).dump(2) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
    try {
        const std::filesystem::path dir = argc > 1 ? argv[1] : "data";
        const std::uint64_t bound = argc > 2 ? std::stoull(argv[2]) : 1000;
        std::filesystem::create_directories(dir);

        const auto s3 = recover::synthetic_s3(bound);
        const auto c4 = recover::synthetic_c4(bound);
        const auto a4 = recover::synthetic_a4(bound);

        write_text(dir / "field_Q.json", field_json(s3).dump(2) + "\n");
        write_text(dir / "field_Qi.json", field_json(c4).dump(2) + "\n");
        emit_table(dir, "s3_ell7.jsonl", recover::make_table(s3, 7));
        emit_table(dir, "s3_ell13.jsonl", recover::make_table(s3, 13));
        emit_table(dir, "c4_ell13.jsonl", recover::make_table(c4, 13));
        emit_table(dir, "c4_ell37.jsonl", recover::make_table(c4, 37));
        emit_table(dir, "a4_ell13.jsonl", recover::make_table(a4, 13));
        emit_table(dir, "a4_ell37.jsonl", recover::make_table(a4, 37));

        emit_group(dir, "group_s3_f7.json", recover::s3_in_gl2(7));
        emit_group(dir, "group_c4_f5.json", recover::c4_in_gl2(5));
        emit_group(dir, "group_s3_f2.json", recover::s3_in_gl2(2));

        {
            std::ofstream f(dir / "satake_c4.jsonl", std::ios::binary);
            io::write_satake(f, to_satake(c4, 5, true));
        }
        {
            std::ofstream f(dir / "satake_s3.jsonl", std::ios::binary);
            io::write_satake(f, to_satake(s3, 23, false));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

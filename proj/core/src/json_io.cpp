#include "niep/json_io.hpp"

#include <cstdio>

namespace niep {

std::string double_str(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json to_json(const Rational& r) { return r.str(); }

json to_json(const QuadExt& q) {
    return json{{"a", q.a().str()}, {"b", q.b().str()}, {"d", q.d()}};
}

json to_json(const Poly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

json to_json(const Spectrum& sp) {
    json vals = json::array();
    for (const auto& v : sp.values()) vals.push_back(v.str());
    return json{{"values", vals}};
}

json to_json(const MatrixQ& m) {
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return json{{"n", m.dim()}, {"field", "rational"}, {"entries", rows}};
}

json to_json(const MatrixQuad& m) {
    long d = 0;
    for (const auto& e : m.entries())
        if (e.d() != 0) d = e.d();
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j) {
            const QuadExt& e = m.at(i, j);
            row.push_back(e.is_rational() ? json(e.a().str()) : to_json(e));
        }
        rows.push_back(row);
    }
    return json{{"n", m.dim()}, {"field", json{{"quad", d}}}, {"entries", rows}};
}

json to_json(const MatrixAny& m) {
    return std::visit([](const auto& mm) { return to_json(mm); }, m);
}

json to_json(const IsolatingInterval& iv) {
    return json{{"lo", iv.lo.str()}, {"hi", iv.hi.str()}, {"root_count", iv.root_count}};
}

json to_json(const ConditionReport& rep) {
    json w = json::object();
    for (const auto& [name, value] : rep.witness) w[name] = value.str();
    return json{{"condition", rep.condition},
                {"applicable", rep.applicable},
                {"satisfied", rep.satisfied},
                {"witness", w},
                {"note", rep.note}};
}

json to_json(const Bipartition& bp) {
    json p1 = json::array(), p2 = json::array();
    for (const auto& v : bp.part1) p1.push_back(v.str());
    for (const auto& v : bp.part2) p2.push_back(v.str());
    return json{{"part1", p1}, {"part2", p2}};
}

json to_json(const Certificate& cert) {
    json j;
    switch (cert.kind) {
        case Certificate::Kind::Matrix: j["kind"] = "matrix"; break;
        case Certificate::Kind::Deduction: j["kind"] = "deduction"; break;
        case Certificate::Kind::Violation: j["kind"] = "violated_condition"; break;
        case Certificate::Kind::PartitionScan: j["kind"] = "partition_scan"; break;
    }
    j["source"] = cert.source;
    if (cert.parameter) j["parameter"] = cert.parameter->str();
    if (!std::holds_alternative<std::monostate>(cert.matrix)) {
        if (const auto* mq = std::get_if<MatrixQ>(&cert.matrix)) j["matrix"] = to_json(*mq);
        if (const auto* mx = std::get_if<MatrixQuad>(&cert.matrix)) j["matrix"] = to_json(*mx);
    }
    if (cert.violation) j["violation"] = to_json(*cert.violation);
    if (!cert.detail.empty()) j["detail"] = cert.detail;
    return j;
}

json to_json(const Verdict& v) {
    json j{{"problem", to_string(v.problem)}, {"status", to_string(v.status)}};
    if (v.certificate) j["certificate"] = to_json(*v.certificate);
    return j;
}

json to_json(const Classification& cls) {
    json conds = json::array();
    for (const auto& c : cls.conditions) conds.push_back(to_json(c));
    json j{{"conditions", conds},
           {"verdicts", json{{"NIEP", to_json(cls.niep)},
                             {"D-RNIEP", to_json(cls.drniep)},
                             {"SNIEP", to_json(cls.sniep)}}}};
    if (cls.partition_scan_ran) {
        json parts = json::array();
        for (const auto& bp : cls.viable_partitions) parts.push_back(to_json(bp));
        j["partition_scan"] = json{{"ran", true}, {"viable", parts}};
    } else {
        j["partition_scan"] = json{{"ran", false}};
    }
    return j;
}

json to_json(const VerificationReport& rep) {
    json details = json::object();
    for (const auto& [k, v] : rep.details) details[k] = v;
    return json{{"charpoly_match", rep.charpoly_match},
                {"nonnegative", rep.nonnegative},
                {"irreducible", rep.irreducible},
                {"symmetric", rep.symmetric},
                {"diagonalizable", rep.diagonalizable},
                {"details", details}};
}

json to_json(const JordanReport& rep) {
    return json{{"eigenvalue", rep.eigenvalue.str()},
                {"algebraic_multiplicity", rep.algebraic_multiplicity},
                {"block_sizes", rep.block_sizes}};
}

json to_json(const ThresholdResult& res) {
    json j{{"family", res.family}, {"interval", to_json(res.interval)}};
    if (res.has_binding_entry) {
        j["binding_entry"] = json{{"row", res.row}, {"col", res.col}};
        j["binding_poly"] = to_json(res.binding_poly);
    }
    if (res.closed_form) {
        j["closed_form_check"] = json{{"expression", res.closed_form->expression},
                                      {"closed_form_decimal", res.closed_form->closed_form_decimal},
                                      {"interval_mid_decimal", res.closed_form->interval_mid_decimal},
                                      {"abs_diff", double_str(res.closed_form->abs_diff)},
                                      {"tolerance", double_str(1e-9)},
                                      {"agrees", res.closed_form->agrees}};
    }
    return j;
}

json to_json(const FitResult& res) {
    return json{{"p", double_str(res.p)},
                {"q", double_str(res.q)},
                {"w", double_str(res.w)},
                {"h", double_str(res.h)},
                {"residual", double_str(res.residual)},
                {"nonnegative", res.nonnegative},
                {"seed_index", res.seed_index},
                {"iterations", res.iterations}};
}

json to_json(const SignPattern& sp) {
    return json{{"positives", sp.positives},
                {"negatives", sp.negatives},
                {"zeros", sp.zeros},
                {"tolerance", double_str(sp.tolerance)}};
}

json to_json(const ExtremeAuditRecord& rec) {
    return json{{"quartic", to_json(rec.quartic)},
                {"root_interval", to_json(rec.root)},
                {"root_decimal", to_decimal(rec.root.midpoint(), 12)},
                {"reference", rec.reference.str()},
                {"reference_decimal", to_decimal(rec.reference, 12)},
                {"abs_diff", to_decimal(rec.abs_diff, 12)},
                {"tolerance", "1/1000"},
                {"discrepancy", rec.discrepancy}};
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Rational::from_string(j.get<std::string>());
    throw DomainError("expected a rational as \"p/q\" string, got: " + j.dump());
}

QuadExt quadext_from_json(const json& j) {
    if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j.contains("d"))
        throw DomainError("expected {a, b, d} quadratic scalar, got: " + j.dump());
    return QuadExt(rational_from_json(j.at("a")), rational_from_json(j.at("b")),
                   j.at("d").get<long>());
}

Poly poly_from_json(const json& j) {
    const json& arr = j.is_object() && j.contains("coeffs") ? j.at("coeffs") : j;
    if (!arr.is_array()) throw DomainError("expected a coefficient array, got: " + j.dump());
    std::vector<Rational> c;
    c.reserve(arr.size());
    for (const auto& v : arr) c.push_back(rational_from_json(v));
    return Poly(std::move(c));
}

Spectrum spectrum_from_json(const json& j) {
    if (!j.is_object() || !j.contains("values") || !j.at("values").is_array())
        throw DomainError("expected {\"values\": [...]}, got: " + j.dump());
    std::vector<Rational> vals;
    for (const auto& v : j.at("values")) vals.push_back(rational_from_json(v));
    return Spectrum(std::move(vals));
}

MatrixAny matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw DomainError("expected {n, field, entries} matrix object");
    const int n = j.at("n").get<int>();
    const json& rows = j.at("entries");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw DomainError("matrix entries do not match dimension");

    bool quad = false;
    long d = 0;
    if (j.contains("field") && j.at("field").is_object()) {
        quad = true;
        d = j.at("field").at("quad").get<long>();
    }

    if (!quad) {
        std::vector<Rational> entries;
        entries.reserve(static_cast<size_t>(n) * n);
        for (const auto& row : rows) {
            if (!row.is_array() || static_cast<int>(row.size()) != n)
                throw DomainError("matrix entries do not match dimension");
            for (const auto& v : row) entries.push_back(rational_from_json(v));
        }
        return MatrixQ(n, std::move(entries));
    }

    std::vector<QuadExt> entries;
    entries.reserve(static_cast<size_t>(n) * n);
    for (const auto& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw DomainError("matrix entries do not match dimension");
        for (const auto& v : row) {
            if (v.is_object()) {
                QuadExt q = quadext_from_json(v);
                if (q.d() != 0 && q.d() != d)
                    throw DomainError("matrix entry uses a different quadratic field");
                entries.push_back(q);
            } else {
                entries.push_back(QuadExt(rational_from_json(v)));
            }
        }
    }
    return MatrixQuad(n, std::move(entries));
}

}  // namespace niep

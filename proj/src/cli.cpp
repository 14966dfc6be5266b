#include "gbound/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "gbound/bounds.hpp"
#include "gbound/mass.hpp"
#include "gbound/oracle.hpp"
#include "gbound/primes.hpp"
#include "gbound/verify.hpp"

namespace gbound::cli {

namespace {

using nlohmann::json;

json factored_json(const FactoredInteger& f) {
    json factors = json::array();
    for (auto& [p, e] : f.factors())
        factors.push_back({p, e});
    return json{{"value", f.value().str()}, {"factors", factors}};
}

std::string factored_text(const json& f) {
    std::string out;
    for (const json& pe : f.at("factors")) {
        if (!out.empty())
            out += "·";
        out += std::to_string(pe.at(0).get<std::uint64_t>());
        unsigned e = pe.at(1).get<unsigned>();
        if (e > 1)
            out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

std::string rational_text(const std::string& value, const json& den_factors) {
    std::string den = factored_text(den_factors);
    auto slash = value.find('/');
    std::string num = slash == std::string::npos ? value : value.substr(0, slash);
    if (den == "1")
        return value;
    return value + " = " + num + "/(" + den + ")";
}

std::string bound_name(const std::string& kind) {
    if (kind == "s")
        return "S";
    if (kind == "m")
        return "M";
    if (kind == "torus")
        return "Torus";
    if (kind == "achievable")
        return "Achievable";
    return "Corank";
}

std::string bound_line(const json& doc, const json& per_ell) {
    std::string head = bound_name(doc.at("kind").get<std::string>()) + "(" +
                       doc.at("root").get<std::string>() + ", " +
                       doc.at("field").get<std::string>() +
                       ", ell=" + std::to_string(per_ell.at("ell").get<std::uint64_t>()) + ")";
    const json& value = per_ell.at("bound").at("value");
    if (value.is_string()) {
        return head + " = inf (" + per_ell.at("criterion").get<std::string>() + ")";
    }
    std::string line = head + " = " + std::to_string(value.get<long>());
    if (per_ell.contains("optimal"))
        line += per_ell.at("optimal").get<bool>() ? " (optimal)" : " (not optimal)";
    return line;
}

std::string render(const json& doc) {
    const std::string command = doc.at("command").get<std::string>();
    std::ostringstream out;
    if (command == "minkowski") {
        if (doc.contains("exponent"))
            out << "M(" << doc.at("n").get<long>() << ","
                << doc.at("ell").get<std::uint64_t>() << ") = " << doc.at("exponent").get<long>();
        else
            out << doc.at("bound").at("value").get<std::string>() << " = "
                << factored_text(doc.at("bound"));
    } else if (command == "schur") {
        out << "M_k(" << doc.at("n").get<long>() << "," << doc.at("ell").get<std::uint64_t>()
            << ") = " << doc.at("exponent").get<long>() << " (k="
            << doc.at("field").get<std::string>() << ")";
    } else if (command == "invariants") {
        out << "t=" << doc.at("t").get<long>() << " m=";
        if (doc.at("m").is_string())
            out << "inf";
        else
            out << doc.at("m").get<long>();
        if (doc.contains("type"))
            out << " type=" << doc.at("type").get<std::string>();
    } else if (command == "bound") {
        if (doc.contains("exponents")) {
            bool first = true;
            for (const json& cell : doc.at("exponents")) {
                if (!first)
                    out << "\n";
                first = false;
                out << bound_line(doc, cell);
            }
            out << "\n"
                << bound_name(doc.at("kind").get<std::string>()) << "("
                << doc.at("root").get<std::string>() << ", " << doc.at("field").get<std::string>()
                << ") = " << doc.at("product").at("value").get<std::string>() << " = "
                << factored_text(doc.at("product"));
        } else {
            out << bound_line(doc, doc);
        }
    } else if (command == "mass") {
        if (doc.contains("mass_exponent")) {
            out << "v_" << doc.at("ell").get<std::uint64_t>() << "(denominator mass("
                << doc.at("root").get<std::string>()
                << ")) = " << doc.at("mass_exponent").get<long>()
                << ", m-bound = " << doc.at("m_bound_exponent").get<long>();
        } else {
            out << "mass(" << doc.at("root").get<std::string>() << ") = "
                << rational_text(doc.at("mass").get<std::string>(),
                                 doc.at("denominator"));
        }
    } else if (command == "witness") {
        const std::string kind = doc.at("kind").get<std::string>();
        if (kind == "wreath") {
            out << "wreath(n=" << doc.at("n").get<long>()
                << ", ell=" << doc.at("ell").get<std::uint64_t>()
                << "): order = " << doc.at("order").at("value").get<std::string>() << " = "
                << factored_text(doc.at("order")) << ", v = " << doc.at("v").get<long>()
                << ", minkowski = " << doc.at("minkowski").get<long>();
        } else if (kind == "schur") {
            out << "schur-witness(N=" << doc.at("N").get<long>()
                << ", ell=" << doc.at("ell").get<std::uint64_t>() << ", t=" << doc.at("t").get<long>()
                << ", m=" << doc.at("m").get<long>() << "): v_full = " << doc.at("v_full").get<long>()
                << ", v_det1 = " << doc.at("v_det1").get<long>();
        } else {
            out << "gl2(p=" << doc.at("p").get<std::uint64_t>()
                << ", ell=" << doc.at("ell").get<std::uint64_t>()
                << "): enumerated = " << doc.at("enumerated").get<long>()
                << ", formula = " << doc.at("formula").get<long>();
        }
    } else if (command == "verify") {
        for (const json& check : doc.at("checks")) {
            out << (check.at("status").get<std::string>() == "pass" ? "[PASS] " : "[FAIL] ")
                << check.at("suite").get<std::string>() << " " << check.at("name").get<std::string>()
                << ": " << check.at("witness").get<std::string>() << "\n";
        }
        out << "passed " << doc.at("passed").get<long>() << "/"
            << (doc.at("passed").get<long>() + doc.at("failed").get<long>());
    } else if (command == "table") {
        bool first = true;
        for (const json& line : doc.at("lines")) {
            if (!first)
                out << "\n";
            first = false;
            out << line.get<std::string>();
        }
    } else {
        throw std::invalid_argument("unknown result document '" + command + "'");
    }
    return out.str();
}

std::uint64_t parse_prime(const std::string& text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("expected a prime, got '" + text + "'");
    std::uint64_t ell = std::stoull(text);
    if (!is_prime(ell))
        throw std::invalid_argument("ell = " + text + " is not prime");
    return ell;
}

json bound_cell_json(std::uint64_t ell, const BoundValue& bound, const std::string& criterion) {
    json value = bound.is_infinite() ? json("inf") : json(bound.finite());
    json cell{{"ell", ell},
              {"bound", json{{"value", value}, {"source", bound_source_tag(bound.source)}}}};
    if (bound.is_infinite())
        cell["criterion"] = criterion;
    return cell;
}

struct Request {
    json doc;      // filled by exec
    int exit = 0;  // 3 for verification failure
};

json exec_bound(const std::string& kind, const RootSystem& root, const FieldDescriptor& field,
                const std::string& ell_text) {
    json doc{{"command", "bound"},
             {"kind", kind},
             {"root", root_to_string(root)},
             {"field", field_to_string(field)}};
    auto single = [&](std::uint64_t ell) -> json {
        CycloInvariants inv = invariants(field, ell);
        if (kind == "s") {
            return bound_cell_json(ell, s_bound(root, inv, ell), "m=inf and [r/phi(t)]>=1");
        } else if (kind == "m") {
            return bound_cell_json(ell, m_bound(root, inv, ell), "m=inf and a(t)>=1");
        } else if (kind == "torus") {
            return bound_cell_json(ell, torus_bound(root.rank, inv),
                                   "m=inf and [dim/phi(t)]>=1");
        } else if (kind == "achievable") {
            AchievableValue v = achievable_exponent(root, inv, ell);
            json cell{{"ell", ell},
                      {"bound", json{{"value", v.value},
                                     {"source", bound_source_tag(BoundSource::achievable)}}},
                      {"optimal", v.optimal}};
            return cell;
        } else if (kind == "corank") {
            json cell{{"ell", ell},
                      {"bound", json{{"value", corank_bound(root, inv)},
                                     {"source", bound_source_tag(BoundSource::corank)}}}};
            return cell;
        }
        throw std::invalid_argument("unknown bound kind '" + kind + "'");
    };
    if (ell_text == "all") {
        BoundSource source;
        if (kind == "s")
            source = BoundSource::s_bound;
        else if (kind == "m")
            source = BoundSource::m_bound;
        else if (kind == "achievable")
            source = BoundSource::achievable;
        else
            throw std::invalid_argument("--ell all supports kinds s, m and achievable");
        if (!std::holds_alternative<Rationals>(field))
            throw std::invalid_argument("--ell all enumerates primes over the field Q only");
        doc["ell"] = "all";
        json cells = json::array();
        FactoredInteger product;
        for (std::uint64_t ell : relevant_primes_over_q(root, source)) {
            json cell = single(ell);
            product.multiply_prime_power(ell, cell.at("bound").at("value").get<long>());
            cells.push_back(cell);
        }
        doc["exponents"] = cells;
        doc["product"] = factored_json(product);
    } else {
        std::uint64_t ell = parse_prime(ell_text);
        doc.update(single(ell));
    }
    return doc;
}

json exec_table(const std::string& name) {
    json lines = json::array();
    if (name == "minkowski8") {
        for (long n = 1; n <= 8; ++n) {
            FactoredInteger m = minkowski_bound(n);
            std::string factored = m.to_string();
            std::string decimal = m.value().str();
            std::string line = "M(" + std::to_string(n) + ") = " + factored;
            if (factored != decimal)
                line += " = " + decimal;
            lines.push_back(line);
        }
    } else if (name == "e8") {
        RootSystem e8{RootType::E8, 8};
        FactoredInteger m, s;
        for (std::uint64_t ell : relevant_primes_over_q(e8, BoundSource::s_bound)) {
            CycloInvariants inv = invariants(Rationals{}, ell);
            m.multiply_prime_power(ell, m_bound(e8, inv, ell).finite());
            s.multiply_prime_power(ell, s_bound(e8, inv, ell).finite());
        }
        lines.push_back("M(Q,E8) = " + m.to_string());
        lines.push_back("M_S(Q,E8) = " + s.to_string());
        lines.push_back("M_S/M = " + (s / m).to_string());
    } else if (name == "f4mass") {
        RootSystem g2{RootType::G2, 2}, f4{RootType::F4, 4};
        auto line_for = [](const std::string& label, const BigRational& value) {
            FactoredInteger den = FactoredInteger::from_integer(denominator(value));
            return label + " = " + numerator(value).str() + "/" + denominator(value).str() +
                   " = " + numerator(value).str() + "/(" + den.to_string() + ")";
        };
        lines.push_back(line_for("mass(G2)", mass(g2)));
        lines.push_back(line_for("mass(F4)", mass(f4)));
        FactoredInteger class1 = FactoredInteger::prime_power(2, 15) *
                                 FactoredInteger::prime_power(3, 6) *
                                 FactoredInteger::prime_power(5, 2) *
                                 FactoredInteger::prime_power(7, 1);
        FactoredInteger class2 = FactoredInteger::prime_power(2, 12) *
                                 FactoredInteger::prime_power(3, 5) *
                                 FactoredInteger::prime_power(7, 2) *
                                 FactoredInteger::prime_power(13, 1);
        BigRational sum = BigRational(1) / BigRational(class1.value()) +
                          BigRational(1) / BigRational(class2.value());
        lines.push_back("1/(" + class1.to_string() + ") + 1/(" + class2.to_string() + ") = " +
                        numerator(sum).str() + "/(" +
                        FactoredInteger::from_integer(denominator(sum)).to_string() + ")");
    } else {
        throw std::invalid_argument("unknown table '" + name + "'");
    }
    return json{{"command", "table"}, {"name", name}, {"lines", lines}};
}

} // namespace

std::string render_text(const std::string& json_document) {
    return render(json::parse(json_document));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact multiplicative bounds for finite subgroups of reductive groups"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit the JSON document instead of text");

    long n = 0;
    int big_n = 0;
    std::uint64_t p = 0;
    std::string ell_text = "all", field_text = "Q", root_text, kind, name, suite;

    CLI::App* minkowski = app.add_subcommand("minkowski", "Minkowski bound M(n) or M(n,ell)");
    minkowski->add_option("--n", n, "matrix size")->required();
    minkowski->add_option("--ell", ell_text, "prime, or 'all' for the factored bound");

    CLI::App* schur = app.add_subcommand("schur", "number-field exponent M_k(n,ell)");
    schur->add_option("--n", n)->required();
    schur->add_option("--ell", ell_text)->required();
    schur->add_option("--field", field_text)->required();

    CLI::App* invariants_cmd = app.add_subcommand("invariants", "cyclotomic invariants (t, m[, type])");
    invariants_cmd->add_option("--field", field_text)->required();
    invariants_cmd->add_option("--ell", ell_text)->required();

    CLI::App* bound = app.add_subcommand("bound", "s | m | torus | achievable | corank bounds");
    bound->add_option("--kind", kind)->required()->check(CLI::IsMember({"s", "m", "torus", "achievable", "corank"}));
    bound->add_option("--root", root_text)->required();
    bound->add_option("--field", field_text)->required();
    bound->add_option("--ell", ell_text)->required();

    CLI::App* mass_cmd = app.add_subcommand("mass", "mass formula values");
    mass_cmd->add_option("--root", root_text)->required();
    std::string mass_ell;
    mass_cmd->add_option("--ell", mass_ell);

    CLI::App* witness = app.add_subcommand("witness", "witness-group arithmetic");
    witness->add_option("--kind", kind)->required()->check(CLI::IsMember({"wreath", "schur", "gl2"}));
    witness->add_option("--n", n);
    witness->add_option("--N", big_n);
    witness->add_option("--p", p);
    witness->add_option("--ell", ell_text);
    witness->add_option("--field", field_text);

    CLI::App* verify = app.add_subcommand("verify", "run the oracle batteries");
    verify->add_option("--suite", suite);

    CLI::App* table = app.add_subcommand("table", "golden tables for diffing");
    table->add_option("--name", name)->required()->check(CLI::IsMember({"minkowski8", "e8", "f4mass"}));

    for (CLI::App* sub : app.get_subcommands(nullptr))
        sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    json doc;
    int exit_code = 0;
    try {
        if (minkowski->parsed()) {
            doc = json{{"command", "minkowski"}, {"n", n}};
            if (ell_text == "all") {
                doc["bound"] = factored_json(minkowski_bound(n));
            } else {
                std::uint64_t ell = parse_prime(ell_text);
                doc["ell"] = ell;
                doc["exponent"] = minkowski_exponent(n, ell);
            }
        } else if (schur->parsed()) {
            std::uint64_t ell = parse_prime(ell_text);
            FieldDescriptor field = parse_field(field_text);
            doc = json{{"command", "schur"},
                       {"n", n},
                       {"ell", ell},
                       {"field", field_to_string(field)},
                       {"exponent", schur_exponent(n, ell, invariants(field, ell))}};
        } else if (invariants_cmd->parsed()) {
            std::uint64_t ell = parse_prime(ell_text);
            FieldDescriptor field = parse_field(field_text);
            CycloInvariants inv = invariants(field, ell);
            doc = json{{"command", "invariants"},
                       {"field", field_to_string(field)},
                       {"ell", ell},
                       {"t", inv.t}};
            if (inv.m.is_infinite())
                doc["m"] = "inf";
            else
                doc["m"] = inv.m.value();
            if (inv.two_type)
                doc["type"] = std::string(1, two_type_letter(*inv.two_type));
        } else if (bound->parsed()) {
            doc = exec_bound(kind, parse_root(root_text), parse_field(field_text), ell_text);
        } else if (mass_cmd->parsed()) {
            RootSystem root = parse_root(root_text);
            doc = json{{"command", "mass"}, {"root", root_to_string(root)}};
            if (mass_ell.empty()) {
                BigRational value = mass(root);
                doc["mass"] = numerator(value).str() + "/" + denominator(value).str();
                doc["denominator"] = factored_json(FactoredInteger::from_integer(denominator(value)));
            } else {
                std::uint64_t ell = parse_prime(mass_ell);
                auto [den_exp, bound_exp] = mass_denominator_exponent(root, ell);
                doc["ell"] = ell;
                doc["mass_exponent"] = den_exp;
                doc["m_bound_exponent"] = bound_exp;
            }
        } else if (witness->parsed()) {
            if (kind == "wreath") {
                std::uint64_t ell = parse_prime(ell_text);
                WreathWitness w = wreath_witness(static_cast<int>(n), ell);
                doc = json{{"command", "witness"}, {"kind", "wreath"},     {"n", n},
                           {"ell", ell},          {"order", factored_json(w.order)},
                           {"v", w.v},            {"minkowski", minkowski_exponent(n, ell)}};
            } else if (kind == "schur") {
                std::uint64_t ell = parse_prime(ell_text);
                CycloInvariants inv = invariants(parse_field(field_text), ell);
                SchurWitness w = schur_witness(big_n, inv);
                doc = json{{"command", "witness"}, {"kind", "schur"}, {"N", big_n},
                           {"ell", ell},           {"t", inv.t},      {"m", inv.m.value()},
                           {"v_full", w.v_full},   {"v_det1", w.v_det1}};
            } else {
                std::uint64_t ell = parse_prime(ell_text);
                long enumerated = enumerate_gl2_sylow(p, ell);
                long formula = gl_order(2, p).exponent(ell);
                doc = json{{"command", "witness"}, {"kind", "gl2"},          {"p", p},
                           {"ell", ell},           {"enumerated", enumerated}, {"formula", formula}};
            }
        } else if (verify->parsed()) {
            std::vector<CheckResult> checks =
                suite.empty() ? run_all_verify_suites() : run_verify_suite(suite);
            long passed = 0, failed = 0;
            json arr = json::array();
            for (const CheckResult& check : checks) {
                (check.passed ? passed : failed)++;
                arr.push_back(json{{"suite", check.suite},
                                   {"name", check.name},
                                   {"status", check.passed ? "pass" : "fail"},
                                   {"witness", check.witness}});
            }
            doc = json{{"command", "verify"}, {"checks", arr}, {"passed", passed}, {"failed", failed}};
            if (failed > 0)
                exit_code = 3;
        } else if (table->parsed()) {
            doc = exec_table(name);
        }
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    if (as_json)
        out << doc.dump(2) << "\n";
    else
        out << render(doc) << "\n";
    return exit_code;
}

} // namespace gbound::cli

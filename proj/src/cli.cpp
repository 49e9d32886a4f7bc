#include "holm/cli.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "holm/division_polys.hpp"
#include "holm/group_law.hpp"
#include "holm/isomorphism.hpp"
#include "holm/serialize.hpp"
#include "holm/torsion.hpp"

namespace holm::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string k, l;
    std::string n;
    std::string x, y;
    bool to_e = false;
    bool to_h = false;
    std::string method = "grouplaw";
    std::string json_path;
    std::ostream* json_out = nullptr;
    std::string bound;
    int max_order = 12;
    unsigned workers = 1;
};

class Emitter {
public:
    Emitter(std::ostream& out, std::string path) : out_(out), path_(std::move(path)) {}

    void write(const json& doc) const {
        if (path_.empty()) return;
        if (path_ == "-") {
            out_ << doc.dump(2) << "\n";
            return;
        }
        std::ofstream file(path_);
        if (!file) throw ValidationError("cannot open '" + path_ + "' for writing");
        file << doc.dump(2) << "\n";
    }

private:
    std::ostream& out_;
    std::string path_;
};

HolmParams params_from(const Options& o) {
    return HolmParams::make(parse_integer(o.k), parse_integer(o.l));
}

json params_json(const HolmParams& p) {
    return json{{"k", to_string(p.k())}, {"l", to_string(p.l())}};
}

Integer bound_from(const Options& o, const WeierstrassCurve& curve) {
    if (o.bound.empty()) return default_x_bound(curve);
    Integer b = parse_integer(o.bound);
    if (b < 1) throw ValidationError("--bound must be >= 1");
    return b;
}

std::string list_str(const Poly& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i != 0) s += ", ";
        s += to_string(p.coeffs()[i]);
    }
    return s + "]";
}

std::vector<Integer> primes_of_kl(const HolmParams& p) {
    std::vector<Integer> primes;
    for (const auto& pp : prime_factorize(Integer(p.k() * p.l()))) primes.push_back(pp.prime);
    return primes;
}

int cmd_validate(const Options& o, std::ostream& out) {
    Integer k = parse_integer(o.k);
    Integer l = parse_integer(o.l);
    auto why = HolmParams::violation(k, l);
    if (why) {
        out << "invalid: " << *why << "\n";
    } else {
        out << "valid: k = " << k << ", l = " << l << "\n";
    }
    Emitter(*o.json_out, o.json_path)
        .write(json{{"k", to_string(k)},
                    {"l", to_string(l)},
                    {"valid", !why},
                    {"reason", why ? json(*why) : json(nullptr)}});
    return why ? kValidation : kOk;
}

int cmd_map(const Options& o, std::ostream& out) {
    if (o.to_e == o.to_h) throw ValidationError("map: give exactly one of --to-e or --to-h");
    HolmParams params = params_from(o);
    Rational x = Rational::parse(o.x);
    Rational y = Rational::parse(o.y);
    json doc{{"params", params_json(params)}, {"direction", o.to_e ? "to-e" : "to-h"}};
    if (o.to_e) {
        HPoint in{x, y};
        EPoint image = gamma(params, in);
        out << image.str() << "\n";
        doc["input"] = to_json(in);
        doc["output"] = to_json(image);
    } else {
        EPoint in = EPoint::affine(x, y);
        HPoint image = gamma_inv(params, in);
        out << image.str() << "\n";
        doc["input"] = to_json(in);
        doc["output"] = to_json(image);
    }
    Emitter(*o.json_out, o.json_path).write(doc);
    return kOk;
}

EPoint divpoly_multiple(const WeierstrassCurve& curve, long long n, const EPoint& p) {
    if (n == 0 || p.is_infinity()) return EPoint::infinity();
    EPoint base = n < 0 ? e_negate(curve, p) : p;
    long long m = n < 0 ? -n : n;
    if (m == 1) return base;
    DivPolyCache cache(curve);
    return mul_via_divpolys(cache, static_cast<long>(m), base);
}

int cmd_mul(const Options& o, std::ostream& out) {
    HolmParams params = params_from(o);
    WeierstrassCurve curve = curve_from_params(params);
    Integer n_big = parse_integer(o.n);
    if (!n_big.fits_slong_p()) throw ValidationError("mul: n out of range");
    const long long n = n_big.get_si();
    EPoint p = EPoint::affine(Rational::parse(o.x), Rational::parse(o.y));
    if (!on_E(curve, p)) throw ValidationError("mul: point " + p.str() + " is not on E");
    if (o.method != "grouplaw" && o.method != "divpoly" && o.method != "both") {
        throw ValidationError("mul: --method must be grouplaw, divpoly or both");
    }

    json doc{{"params", params_json(params)},
             {"n", std::to_string(n)},
             {"point", to_json(p)},
             {"method", o.method}};
    std::optional<EPoint> by_group, by_divpoly;
    if (o.method != "divpoly") by_group = e_scalar_mul(curve, n, p);
    if (o.method != "grouplaw") by_divpoly = divpoly_multiple(curve, n, p);

    const EPoint& result = by_group ? *by_group : *by_divpoly;
    if (o.method == "both") {
        out << "grouplaw: " << by_group->str() << "\n";
        out << "divpoly:  " << by_divpoly->str() << "\n";
    } else {
        out << result.str() << "\n";
    }
    if (by_group) doc["grouplaw"] = to_json(*by_group);
    if (by_divpoly) doc["divpoly"] = to_json(*by_divpoly);

    if (!result.is_infinity()) {
        json vals = json::object();
        for (const auto& q : primes_of_kl(params)) {
            Valuation v = vp(result.x(), q);
            out << "v" << q << "(x) = " << v.str() << "\n";
            vals[to_string(q)] = v.str();
        }
        doc["x_valuations"] = vals;
    }

    int code = kOk;
    if (o.method == "both") {
        bool match = *by_group == *by_divpoly;
        out << (match ? "MATCH" : "MISMATCH") << "\n";
        doc["match"] = match;
        if (!match) code = kConsistency;
    }
    Emitter(*o.json_out, o.json_path).write(doc);
    return code;
}

int cmd_divpoly(const Options& o, std::ostream& out) {
    HolmParams params = params_from(o);
    Integer n_big = parse_integer(o.n);
    if (n_big < 0 || !n_big.fits_slong_p()) throw ValidationError("divpoly: n must be >= 0");
    const long n = n_big.get_si();
    DivPolyCache cache(curve_from_params(params));

    json doc{{"params", params_json(params)}, {"n", std::to_string(n)}};
    const CurvePoly& psi = cache.psi(n);
    out << "psi_" << n << " f: " << list_str(psi.f) << "\n";
    out << "psi_" << n << " g: " << list_str(psi.g) << "\n";
    doc["psi"] = to_json(psi);
    doc["phi"] = nullptr;
    doc["omega"] = nullptr;
    if (n >= 1) {
        const Poly& phi = cache.phi(n);
        out << "phi_" << n << ": " << list_str(phi) << "\n";
        doc["phi"] = to_json(phi);
    }
    if (n >= 2) {
        const CurvePoly& omega = cache.omega(n);
        out << "omega_" << n << " f: " << list_str(omega.f) << "\n";
        out << "omega_" << n << " g: " << list_str(omega.g) << "\n";
        doc["omega"] = to_json(omega);
    }
    Emitter(*o.json_out, o.json_path).write(doc);
    return kOk;
}

std::string report_row(const LemmaReport& r) {
    std::ostringstream row;
    row << std::left << std::setw(26) << r.point.str() << " lemma " << r.lemma_id << "  q=" << r.prime
        << "  v_q(x(" << r.valuation_multiple << "P)) = "
        << (r.observed_valuation ? r.observed_valuation->str() : "none")
        << (r.relation == Relation::Equals ? " (expected " : " (bound <= ") << r.claimed << ")";
    if (r.witness_non_integral) {
        row << "  " << r.multiple_used << "P " << (*r.witness_non_integral ? "non-integral" : "INTEGRAL");
    }
    row << "  " << to_string(r.verdict);
    return row.str();
}

int cmd_lemmas(const Options& o, std::ostream& out) {
    HolmParams params = params_from(o);
    WeierstrassCurve curve = curve_from_params(params);
    Integer bound = bound_from(o, curve);
    auto points = find_integral_points(curve, bound, o.workers);

    std::vector<LemmaReport> reports;
    std::vector<std::string> findings;
    for (const auto& p : points) {
        for (auto& f : audit_point(curve, p)) findings.push_back(std::move(f));
        for (const auto& q : primes_of_kl(params)) {
            if (q == 2) reports.push_back(lemma1_check(curve, p));
            if (q != 2) reports.push_back(lemma2_check(curve, p, q));
            if (q >= 5) reports.push_back(lemma3_check(curve, p, q));
        }
    }
    out << "curve: y^2 = x^3 + (" << curve.a() << ")x + " << curve.b() << "\n";
    out << "integral points with |x| <= " << bound << ": " << points.size() << "\n";
    bool all_confirmed = true;
    json rows = json::array();
    for (const auto& r : reports) {
        out << report_row(r) << "\n";
        all_confirmed = all_confirmed && r.verdict == Verdict::Confirmed;
        rows.push_back(to_json(r));
    }
    for (const auto& f : findings) out << "FINDING: " << f << "\n";
    const bool ok = all_confirmed && findings.empty();
    out << (ok ? "all CONFIRMED" : "VIOLATIONS FOUND") << "\n";
    Emitter(*o.json_out, o.json_path)
        .write(json{{"params", params_json(params)},
                    {"bound", to_string(bound)},
                    {"points", points.size()},
                    {"reports", rows},
                    {"findings", findings},
                    {"all_confirmed", ok}});
    return ok ? kOk : kContradiction;
}

int cmd_certify(const Options& o, std::ostream& out) {
    HolmParams params = params_from(o);
    if (o.max_order < 1) throw ValidationError("--max-order must be >= 1");
    TorsionCertificate cert = certify_torsion_free(params, o.max_order, o.workers);
    out << "curve: y^2 = x^3 + (" << cert.curve.a() << ")x + " << cert.curve.b() << "\n";
    out << "discriminant: " << cert.discriminant << "\n";
    out << "Nagell-Lutz candidates: " << cert.candidates.size() << "\n";
    for (const auto& ev : cert.candidates) {
        out << report_row(ev.report) << "  order<=" << cert.max_order << ": "
            << (ev.order ? std::to_string(*ev.order) : "none") << "\n";
        for (const auto& f : ev.findings) out << "FINDING: " << f << "\n";
    }
    out << to_string(cert.conclusion) << "\n";
    Emitter(*o.json_out, o.json_path).write(to_json(cert));
    return cert.conclusion == Conclusion::TorsionFreeConfirmed ? kOk : kContradiction;
}

int cmd_search(const Options& o, std::ostream& out) {
    HolmParams params = params_from(o);
    WeierstrassCurve curve = curve_from_params(params);
    Integer bound = bound_from(o, curve);
    auto points = find_integral_points(curve, bound, o.workers);
    std::vector<std::string> findings;
    json pts = json::array();
    for (const auto& p : points) {
        out << p.str() << "\n";
        pts.push_back(to_json(p));
        for (auto& f : audit_point(curve, p)) findings.push_back(std::move(f));
    }
    for (const auto& f : findings) out << "FINDING: " << f << "\n";
    Emitter(*o.json_out, o.json_path)
        .write(json{{"params", params_json(params)},
                    {"bound", to_string(bound)},
                    {"points", pts},
                    {"findings", findings}});
    return findings.empty() ? kOk : kContradiction;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact arithmetic on the Holm curve k(y^3 - y) = l(x^3 - x) and its Weierstrass model"};
    app.require_subcommand(1);
    Options o;

    auto add_kl = [&](CLI::App* sub) {
        sub->add_option("k", o.k, "Holm parameter k")->required();
        sub->add_option("l", o.l, "Holm parameter l")->required();
    };
    auto add_json = [&](CLI::App* sub) {
        sub->add_option("--json", o.json_path, "Write structured output to this path ('-' for stdout)");
    };

    auto* validate = app.add_subcommand("validate", "Check the (k, l) constraints");
    add_kl(validate);
    add_json(validate);

    auto* map = app.add_subcommand("map", "Map a point between H and E");
    add_kl(map);
    map->add_flag("--to-e", o.to_e, "H -> E");
    map->add_flag("--to-h", o.to_h, "E -> H");
    map->add_option("x", o.x, "x coordinate (integer or num/den)")->required();
    map->add_option("y", o.y, "y coordinate (integer or num/den)")->required();
    add_json(map);

    auto* mul = app.add_subcommand("mul", "Compute n*P on E");
    add_kl(mul);
    mul->add_option("n", o.n, "multiplier")->required();
    mul->add_option("x", o.x, "x coordinate")->required();
    mul->add_option("y", o.y, "y coordinate")->required();
    mul->add_option("--method", o.method, "grouplaw, divpoly or both");
    add_json(mul);

    auto* divpoly = app.add_subcommand("divpoly", "Print psi_n, phi_n, omega_n coefficients");
    add_kl(divpoly);
    divpoly->add_option("n", o.n, "index")->required();
    add_json(divpoly);

    auto* lemmas = app.add_subcommand("lemmas", "Run the lemma checks on every integral point found");
    add_kl(lemmas);
    lemmas->add_option("--bound", o.bound, "integral-point scan bound on |x|");
    lemmas->add_option("--workers", o.workers, "scan threads");
    add_json(lemmas);

    auto* certify = app.add_subcommand("certify", "Certify that E(Q) has no torsion");
    add_kl(certify);
    certify->add_option("--max-order", o.max_order, "order scan cap");
    certify->add_option("--workers", o.workers, "candidate threads");
    add_json(certify);

    auto* search = app.add_subcommand("search-integral", "List integral points of E with |x| <= bound");
    add_kl(search);
    search->add_option("--bound", o.bound, "scan bound on |x|");
    search->add_option("--workers", o.workers, "scan threads");
    add_json(search);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kValidation;
    }

    // With --json -, stdout carries only the JSON document.
    std::ostream discard(nullptr);
    std::ostream& text = o.json_path == "-" ? discard : out;
    o.json_out = &out;
    try {
        if (*validate) return cmd_validate(o, text);
        if (*map) return cmd_map(o, text);
        if (*mul) return cmd_mul(o, text);
        if (*divpoly) return cmd_divpoly(o, text);
        if (*lemmas) return cmd_lemmas(o, text);
        if (*certify) return cmd_certify(o, text);
        if (*search) return cmd_search(o, text);
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << "\n";
        return kValidation;
    } catch (const CapacityError& e) {
        err << "capacity error: " << e.what() << "\n";
        return kValidation;
    } catch (const TorsionDenominatorError& e) {
        err << "torsion-denominator condition: " << e.what() << "\n";
        return kContradiction;
    } catch (const ContradictionError& e) {
        err << "contradiction: " << e.what() << "\n";
        return kContradiction;
    } catch (const ConsistencyError& e) {
        err << "internal consistency error: " << e.what() << "\n";
        return kConsistency;
    }
    return kValidation;
}

}  // namespace holm::cli

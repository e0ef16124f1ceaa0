// Command-line front end: table emitters and the identity selftest.
//
// Exit codes: 0 success, 1 usage error, 2 computation failure,
// 3 selftest failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ikeda/combinat.hpp"
#include "ikeda/data_tables.hpp"
#include "ikeda/eigen.hpp"
#include "ikeda/errors.hpp"
#include "ikeda/eval.hpp"
#include "ikeda/ingest.hpp"
#include "ikeda/lfactor.hpp"
#include "ikeda/primes.hpp"
#include "ikeda/residue.hpp"
#include "ikeda/series.hpp"

namespace {

using ikeda::exact::EvalPoint;
using ikeda::exact::GaussRat;
using ikeda::exact::LaurentAQ;
using ikeda::exact::PolyX;
using ikeda::exact::QSqrtP;
using ikeda::exact::Rat;
using ikeda::exact::render_decimal;
using json = nlohmann::ordered_json;

struct OutputOpts {
    std::string format = "csv";
    std::string path;  // empty = stdout
    int precision = 128;
};

void add_output_opts(CLI::App* cmd, OutputOpts& o) {
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", o.path, "write to file instead of stdout");
    cmd->add_option("--precision", o.precision, "bits for decimal rendering")
        ->check(CLI::Range(64, 1 << 20))
        ->envname("IKEDA_PRECISION")
        ->capture_default_str();
}

void write_output(const std::string& text, const OutputOpts& o) {
    if (o.path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + o.path);
    f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string render(const QSqrtP& v, const OutputOpts& o) {
    return render_decimal(v, 24, o.precision);
}

struct FormOpts {
    std::string builtin;
    std::string path;
};

void add_form_opts(CLI::App* cmd, FormOpts& f) {
    auto* b = cmd->add_option("--builtin", f.builtin, "bundled eigenform (only: delta)")
                  ->check(CLI::IsMember({"delta"}));
    cmd->add_option("--eigenform", f.path, "eigenform JSON file")->excludes(b);
}

ikeda::ingest::EigenformData resolve_form(const FormOpts& f) {
    if (!f.path.empty()) return ikeda::ingest::load_eigenform_file(f.path);
    if (f.builtin == "delta") return ikeda::ingest::builtin_delta();
    throw std::invalid_argument("an eigenform is required: --builtin delta or --eigenform PATH");
}

std::pair<long, long> parse_prime_range(const std::string& s) {
    auto pos = s.find("..");
    long lo = std::stol(s.substr(0, pos));
    long hi = std::stol(s.substr(pos + 2));
    return {lo, hi};
}

std::string check_prime_range(const std::string& s) {
    auto pos = s.find("..");
    if (pos == std::string::npos) return "expected A..B";
    try {
        auto [lo, hi] = parse_prime_range(s);
        if (lo < 2 || hi < lo) return "need 2 <= A <= B";
    } catch (const std::exception&) {
        return "expected integer bounds A..B";
    }
    return {};
}

std::string sign_str(int s) { return s > 0 ? "+" : (s < 0 ? "-" : "0"); }

// Orders values that may live in different quadratic fields (one per
// prime).  Same-field comparisons stay exact; across fields an interval
// of growing precision decides, which terminates because 1, sqrt(p),
// sqrt(q) are linearly independent over the rationals.
bool value_less(const QSqrtP& x, const QSqrtP& y, int precision) {
    if (x.p == y.p || x.p == 0 || y.p == 0) return x < y;
    if (x.r1 == 0 && y.r1 == 0) return x.r0 < y.r0;
    for (mpfr_prec_t prec = precision; prec <= (1 << 16); prec *= 2) {
        auto d = ikeda::exact::to_interval(x, prec) - ikeda::exact::to_interval(y, prec);
        auto s = d.sign();
        if (s == ikeda::exact::Sign::Negative) return true;
        if (s != ikeda::exact::Sign::Indeterminate) return false;
    }
    throw ikeda::PrecisionExhausted("cross-field comparison undecided; raise --precision");
}

std::string sign_str(ikeda::exact::Sign s) {
    switch (s) {
        case ikeda::exact::Sign::Positive: return "+";
        case ikeda::exact::Sign::Negative: return "-";
        case ikeda::exact::Sign::Zero: return "0";
        default: return "indeterminate";
    }
}

// ---------------------------------------------------------------- commands

int run_alpha_beta(long n, const OutputOpts& out) {
    if (out.format == "csv") {
        write_output(ikeda::combinat::alpha_beta_csv(n), out);
        return 0;
    }
    auto table = ikeda::combinat::beta_table(n);
    json rows = json::array();
    for (const auto& [key, b] : table.entries) {
        auto [j, r] = key;
        rows.push_back({{"j", j},
                        {"r", r},
                        {"alpha", ikeda::combinat::alpha(r, j, n).get_str()},
                        {"beta", b.get_str()}});
    }
    write_output(dump({{"n", n}, {"rows", rows}}), out);
    return 0;
}

PolyX spin_poly(long genus) {
    if (genus == 2) return ikeda::lfactor::classical_spin_Q(1);
    if (genus == 4) return ikeda::lfactor::classical_spin_Q(2);
    throw std::invalid_argument("--genus must be 2 or 4");
}

int run_q_poly(long genus, bool symbolic, const FormOpts& form, long p, const OutputOpts& out) {
    PolyX Q = spin_poly(genus);
    std::vector<std::string> rendered(Q.degree() + 1);
    if (symbolic) {
        for (long i = 0; i <= Q.degree(); ++i) rendered[i] = Q[i].to_string();
    } else {
        auto d = resolve_form(form);
        if (!d.ap.count(p))
            throw std::invalid_argument("no eigenvalue for p = " + std::to_string(p));
        auto u = ikeda::ingest::satake_u(d, p);
        long k = d.weight_2k / 2;
        for (long i = 0; i <= Q.degree(); ++i)
            rendered[i] = render(ikeda::exact::evaluate_symmetric_at_u(Q[i], p, k, u.u), out);
    }
    if (out.format == "csv") {
        std::ostringstream os;
        os << "i,coefficient\n";
        for (long i = 0; i <= Q.degree(); ++i) os << i << ",\"" << rendered[i] << "\"\n";
        write_output(os.str(), out);
    } else {
        json rows = json::array();
        for (long i = 0; i <= Q.degree(); ++i) rows.push_back({{"i", i}, {"coefficient", rendered[i]}});
        write_output(dump({{"genus", genus}, {"symbolic", symbolic}, {"rows", rows}}), out);
    }
    return 0;
}

int run_lambda_p_table(long n, const std::string& primes, const FormOpts& form,
                       const OutputOpts& out) {
    auto d = resolve_form(form);
    auto warn = ikeda::ingest::parity_warning(d, n);
    if (!warn.empty()) std::cerr << "warning: " << warn << "\n";

    long k = d.weight_2k / 2;
    LaurentAQ lam = ikeda::eigen::lambda_p_formula(n);
    auto [lo, hi] = parse_prime_range(primes);

    struct Row {
        long p;
        QSqrtP u, value;
    };
    std::vector<Row> rows;
    for (long p : ikeda::primes_in(lo, hi)) {
        if (!d.ap.count(p))
            throw std::invalid_argument("no eigenvalue for p = " + std::to_string(p) +
                                        "; narrow --primes or supply more data");
        auto u = ikeda::ingest::satake_u(d, p);
        rows.push_back({p, u.u, ikeda::exact::evaluate_symmetric_at_u(lam, p, k, u.u)});
    }
    if (rows.empty()) throw std::invalid_argument("no primes in range " + primes);

    const Row* min_row = &rows[0];
    std::optional<long> first_negative;
    for (const auto& r : rows) {
        if (value_less(r.value, min_row->value, out.precision)) min_row = &r;
        if (!first_negative && r.value.sign() < 0) first_negative = r.p;
    }

    if (out.format == "csv") {
        std::ostringstream os;
        os << "p,u,lambda,sign\n";
        for (const auto& r : rows)
            os << r.p << "," << render(r.u, out) << "," << render(r.value, out) << ","
               << sign_str(r.value.sign()) << "\n";
        os << "# min lambda = " << render(min_row->value, out) << " at p = " << min_row->p << "\n";
        os << "# first negative: "
           << (first_negative ? std::to_string(*first_negative) : std::string("none")) << "\n";
        write_output(os.str(), out);
    } else {
        json jr = json::array();
        for (const auto& r : rows)
            jr.push_back({{"p", r.p},
                          {"u", render(r.u, out)},
                          {"lambda", render(r.value, out)},
                          {"sign", sign_str(r.value.sign())}});
        json summary = {{"min_lambda", render(min_row->value, out)},
                        {"min_at_p", min_row->p},
                        {"first_negative", first_negative ? json(*first_negative) : json(nullptr)}};
        write_output(dump({{"n", n},
                           {"weight_2k", d.weight_2k},
                           {"label", d.label},
                           {"rows", jr},
                           {"summary", summary}}),
                     out);
    }
    return 0;
}

int run_threshold(long n, const OutputOpts& out) {
    auto res = ikeda::eigen::first_sign_threshold(n);
    if (out.format == "csv") {
        std::ostringstream os;
        os << "# n = " << res.n << "\n# p0 = " << res.p0 << "\n";
        os << "# margin at p0 = " << render(res.margin_at_p0, out) << "\n";
        os << "# crude bounds:";
        for (const auto& [r, b] : res.crude_bounds) os << " r=" << r << ":" << b.get_str();
        os << "\np,margin_sign\n";
        for (const auto& [p, s] : res.scan) os << p << "," << sign_str(s) << "\n";
        write_output(os.str(), out);
    } else {
        json bounds = json::object();
        for (const auto& [r, b] : res.crude_bounds) bounds[std::to_string(r)] = b.get_str();
        json scan = json::array();
        for (const auto& [p, s] : res.scan) scan.push_back({{"p", p}, {"sign", sign_str(s)}});
        write_output(dump({{"n", res.n},
                           {"p0", res.p0},
                           {"margin_at_p0", render(res.margin_at_p0, out)},
                           {"crude_bounds", bounds},
                           {"scan", scan}}),
                     out);
    }
    return 0;
}

ikeda::series::NumeratorData numerator_or_throw(long genus, const std::string& variant,
                                                const std::string& path) {
    if (genus == 2) {
        auto v = variant == "printed" ? ikeda::lfactor::Genus2Numerator::AsPrinted
                                      : ikeda::lfactor::Genus2Numerator::Corrected;
        return ikeda::series::genus2_numerator(v);
    }
    if (path.empty())
        throw ikeda::NumeratorDataRequired(
            "degree-16 numerator coefficients are not bundled; supply --numerator PATH");
    auto nd = ikeda::series::load_numerator_file(path);
    if (!nd)
        throw ikeda::NumeratorDataRequired("numerator data file not found: " + path);
    return *nd;
}

int run_lambda_pr_table(long genus, long r_single, long r_max, const std::string& variant,
                        const std::string& numerator_path, long weight_2k,
                        const std::string& primes, const FormOpts& form, const OutputOpts& out) {
    auto nd = numerator_or_throw(genus, variant, numerator_path);

    bool numeric = !form.builtin.empty() || !form.path.empty();
    if (!numeric) {
        // Symbolic rows; a concrete weight just specializes k.
        long lo = r_single >= 0 ? r_single : 0;
        long hi = r_single >= 0 ? r_single : r_max;
        std::vector<std::pair<long, std::string>> rendered;
        for (long r = lo; r <= hi; ++r) {
            LaurentAQ e = ikeda::series::lambda_pr(nd, r);
            if (weight_2k > 0) e = e.substitute_k(weight_2k / 2);
            rendered.emplace_back(r, e.to_string());
        }
        if (out.format == "csv") {
            std::ostringstream os;
            os << "r,lambda_p_r\n";
            for (const auto& [r, s] : rendered) os << r << ",\"" << s << "\"\n";
            write_output(os.str(), out);
        } else {
            json rows = json::array();
            for (const auto& [r, s] : rendered) rows.push_back({{"r", r}, {"lambda_p_r", s}});
            write_output(dump({{"genus", genus}, {"provenance", nd.provenance}, {"rows", rows}}),
                         out);
        }
        return 0;
    }

    // Numeric: one r, a row per prime, Satake parameters from the form.
    if (genus == 2)
        throw std::invalid_argument(
            "numeric lambda(p^r) needs the degree-16 data; the degree-4 expressions keep "
            "lambda placeholders with no bundled values");
    long r = r_single >= 0 ? r_single : 1;
    LaurentAQ expr = ikeda::series::lambda_pr(nd, r);
    auto d = resolve_form(form);
    long k = d.weight_2k / 2;
    auto [lo, hi] = parse_prime_range(primes);
    std::ostringstream cs;
    json rows = json::array();
    cs << "p,u,lambda_p_r,sign\n";
    for (long p : ikeda::primes_in(lo, hi)) {
        if (!d.ap.count(p))
            throw std::invalid_argument("no eigenvalue for p = " + std::to_string(p));
        auto u = ikeda::ingest::satake_u(d, p);
        QSqrtP v = ikeda::exact::evaluate_symmetric_at_u(expr, p, k, u.u);
        cs << p << "," << render(u.u, out) << "," << render(v, out) << ","
           << sign_str(v.sign()) << "\n";
        rows.push_back({{"p", p},
                        {"u", render(u.u, out)},
                        {"value", render(v, out)},
                        {"sign", sign_str(v.sign())}});
    }
    if (out.format == "csv")
        write_output(cs.str(), out);
    else
        write_output(dump({{"genus", genus}, {"r", r}, {"weight_2k", d.weight_2k},
                           {"rows", rows}}),
                     out);
    return 0;
}

int run_verify_appendix(const std::string& file, const std::string& dump_table,
                        const OutputOpts& out) {
    if (!dump_table.empty()) {
        std::ofstream f(dump_table, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open " + dump_table);
        f << ikeda::data::residue_table_json();
    }
    std::vector<ikeda::data::ResidueRow> rows;
    if (file.empty()) {
        rows = ikeda::data::residue_table();
    } else {
        std::ifstream f(file);
        if (!f) throw std::runtime_error("cannot open residue table " + file);
        std::ostringstream buf;
        buf << f.rdbuf();
        rows = ikeda::series::residue_rows_from_json(buf.str());
    }
    auto rep = ikeda::series::verify_appendix(rows);
    if (out.format == "csv") {
        std::ostringstream os;
        os << "row,method,pole_corrected,match\n";
        for (const auto& r : rep.rows)
            os << r.label << "," << r.method << "," << (r.pole_corrected ? "yes" : "no") << ","
               << (r.match ? "yes" : "no") << "\n";
        os << "# second row is -7 times the first: "
           << (rep.structure_second_is_minus7_first ? "ok" : "MISMATCH") << "\n";
        os << "# reconstruction of 1/Q at " << rep.points_used
           << " points: " << (rep.reconstruction_ok ? "ok" : "MISMATCH") << "\n";
        write_output(os.str(), out);
    } else {
        json jr = json::array();
        for (const auto& r : rep.rows)
            jr.push_back({{"row", r.label},
                          {"method", r.method},
                          {"pole_corrected", r.pole_corrected},
                          {"match", r.match},
                          {"note", r.note}});
        write_output(dump({{"rows", jr},
                           {"second_is_minus7_first", rep.structure_second_is_minus7_first},
                           {"reconstruction_ok", rep.reconstruction_ok},
                           {"points_used", rep.points_used},
                           {"all_match", rep.all_match()}}),
                     out);
    }
    return rep.all_match() ? 0 : 2;
}

int run_c_r_threshold(long r, long weight_2k, long prime_hi, int u_grid,
                      const std::string& numerator_path, const OutputOpts& out) {
    auto nd = numerator_or_throw(4, "", numerator_path);
    auto scan = ikeda::series::threshold_C_r(r, weight_2k / 2, nd, prime_hi, u_grid);
    if (out.format == "csv") {
        std::ostringstream os;
        os << "# r = " << scan.r << ", k = " << scan.weight_k << ", primes <= " << scan.prime_hi
           << ", u-grid " << scan.u_grid << "\n";
        os << "# points scanned = " << scan.points << "\n";
        os << "# verdict: " << scan.verdict << "\n";
        os << "p,u,sign\n";
        for (const auto& h : scan.negatives)
            os << h.p << "," << h.u.get_str() << "," << sign_str(h.sign) << "\n";
        for (const auto& h : scan.indeterminates)
            os << h.p << "," << h.u.get_str() << "," << sign_str(h.sign) << "\n";
        write_output(os.str(), out);
    } else {
        auto hits = [](const std::vector<ikeda::series::ScanHit>& v) {
            json arr = json::array();
            for (const auto& h : v)
                arr.push_back({{"p", h.p}, {"u", h.u.get_str()}, {"sign", sign_str(h.sign)}});
            return arr;
        };
        write_output(dump({{"r", scan.r},
                           {"k", scan.weight_k},
                           {"prime_hi", scan.prime_hi},
                           {"u_grid", scan.u_grid},
                           {"points", scan.points},
                           {"negatives", hits(scan.negatives)},
                           {"indeterminates", hits(scan.indeterminates)},
                           {"verdict", scan.verdict}}),
                     out);
    }
    return 0;
}

int run_selftest() {
    bool all = true;
    auto check = [&all](const std::string& name, bool ok) {
        std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
        all = all && ok;
    };

    // The degree-16 product: direct expansion vs the transcribed
    // closed-form factorization, plus the normalization that links the
    // automorphic and classical scales.
    PolyX classical = ikeda::lfactor::classical_spin_Q(2);
    bool product_ok = classical == ikeda::lfactor::genus4_Q_closed();
    product_ok = product_ok &&
                 classical == ikeda::lfactor::automorphic_spin_Q(2).substitute_scale(
                                  LaurentAQ::var_q(-2, 4));
    product_ok = product_ok && ikeda::lfactor::spin_Q_palindromic(classical, 2);
    check("spin-product-factorization", product_ok);

    // lambda(p) three ways: -[x^1] of the product, the closed double
    // sum, and the transcribed eigenvalue formula.
    LaurentAQ vieta = ikeda::eigen::lambda_p_from_Q(classical).expr;
    LaurentAQ closed = ikeda::eigen::lambda_p_formula(2);
    LaurentAQ printed = ikeda::eigen::eigenvalue_form("T(p)").expr;
    check("eigenvalue-triple-agreement", vieta == closed && closed == printed);

    // Partial fractions of 1/Q: derivative certificates plus residue
    // values vs plain series division at exact sample points.
    bool series_ok = true;
    try {
        auto pf = ikeda::series::partial_fraction(ikeda::series::genus4_roots());
        series_ok = ikeda::series::residue_consistency(pf).empty();
        const GaussRat a1{ikeda::exact::make_rat(3, 5), ikeda::exact::make_rat(4, 5)};
        const GaussRat a2{ikeda::exact::make_rat(4, 5), ikeda::exact::make_rat(-3, 5)};
        for (const auto& pt : {EvalPoint::from_gauss(5, 6, a1), EvalPoint::from_gauss(7, 8, a2)})
            for (long r = 0; r <= 6 && series_ok; ++r) {
                auto lhs = ikeda::series::g_value(pf, r, pt);
                auto rhs = ikeda::series::g_series_value(pf, r, pt);
                series_ok = (lhs - rhs).is_zero();
            }
    } catch (const std::exception& e) {
        std::cerr << "series check failed: " << e.what() << "\n";
        series_ok = false;
    }
    check("series-residue-agreement", series_ok);

    auto rep = ikeda::series::verify_appendix(ikeda::data::residue_table());
    check("appendix-reconstruction", rep.all_match());

    auto lead = ikeda::series::leading_coefficient_identity();
    check("leading-coefficient-identity", lead.equal && lead.quotient_is_one);

    std::cout << (all ? "selftest: all identities hold" : "selftest: FAILURES above") << "\n";
    return all ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tables for lifted Hecke eigenforms: local factors, eigenvalues, signs"};
    app.require_subcommand(1);

    OutputOpts out;

    auto* ab = app.add_subcommand("alpha-beta-table", "subset-sum multiplicity table");
    long ab_n = 2;
    ab->add_option("--n", ab_n, "half the set size parameter")->check(CLI::Range(1L, 8L))
        ->capture_default_str();
    add_output_opts(ab, out);

    auto* qp = app.add_subcommand("q-poly", "spin denominator coefficients");
    long qp_genus = 4;
    bool qp_symbolic = false;
    long qp_p = 2;
    FormOpts qp_form;
    qp->add_option("--genus", qp_genus, "2 or 4")->capture_default_str();
    qp->add_flag("--symbolic", qp_symbolic, "emit coefficients as expressions in a, q, k");
    qp->add_option("--p", qp_p, "prime for numeric evaluation")->capture_default_str();
    add_form_opts(qp, qp_form);
    add_output_opts(qp, out);

    auto* lp = app.add_subcommand("lambda-p-table", "lambda(p) with certified signs");
    long lp_n = 2;
    std::string lp_primes = "2..997";
    FormOpts lp_form;
    lp->add_option("--n", lp_n, "lift parameter n (genus 2n)")->check(CLI::Range(1L, 3L))
        ->capture_default_str();
    lp->add_option("--primes", lp_primes, "prime range A..B")
        ->check(CLI::Validator(check_prime_range, "RANGE"))
        ->capture_default_str();
    add_form_opts(lp, lp_form);
    add_output_opts(lp, out);

    auto* th = app.add_subcommand("threshold", "first prime with positive crude margin");
    long th_n = 2;
    th->add_option("--n", th_n, "lift parameter n")->check(CLI::Range(1L, 3L))
        ->capture_default_str();
    add_output_opts(th, out);

    auto* lpr = app.add_subcommand("lambda-pr-table", "lambda(p^r) expressions or values");
    long lpr_genus = 2, lpr_r = -1, lpr_rmax = 4, lpr_weight = 0;
    std::string lpr_variant = "corrected", lpr_numerator, lpr_primes = "2..997";
    FormOpts lpr_form;
    lpr->add_option("--genus", lpr_genus, "2 or 4")->capture_default_str();
    lpr->add_option("--r", lpr_r, "emit a single r")->check(CLI::Range(0L, 24L));
    lpr->add_option("--r-max", lpr_rmax, "largest r (symbolic mode)")->check(CLI::Range(0L, 24L))
        ->capture_default_str();
    lpr->add_option("--weight-2k", lpr_weight, "substitute a concrete weight 2k")
        ->check(CLI::Range(12L, 128L));
    lpr->add_option("--variant", lpr_variant, "genus-2 numerator variant")
        ->check(CLI::IsMember({"printed", "corrected"}))
        ->capture_default_str();
    lpr->add_option("--numerator", lpr_numerator, "numerator data JSON (genus 4)");
    lpr->add_option("--primes", lpr_primes, "prime range A..B for numeric mode")
        ->check(CLI::Validator(check_prime_range, "RANGE"))
        ->capture_default_str();
    add_form_opts(lpr, lpr_form);
    add_output_opts(lpr, out);

    auto* va = app.add_subcommand("verify-appendix", "check the transcribed residue table");
    std::string va_file, va_dump;
    va->add_option("--file", va_file, "residue table JSON (default: bundled)");
    va->add_option("--dump-table", va_dump, "write the bundled table as JSON to PATH");
    add_output_opts(va, out);

    auto* crt = app.add_subcommand("c-r-threshold", "empirical sign scan for lambda(p^r)");
    long crt_r = 1, crt_k = 12, crt_hi = 997;
    int crt_grid = 101;
    std::string crt_numerator;
    crt->add_option("--r", crt_r, "prime power exponent")->check(CLI::Range(0L, 12L))
        ->capture_default_str();
    crt->add_option("--weight-2k", crt_k, "weight 2k of the input form")
        ->check(CLI::Range(12L, 128L))
        ->capture_default_str();
    crt->add_option("--primes-hi", crt_hi, "scan primes up to this bound")
        ->check(CLI::Range(2L, 100000L))
        ->capture_default_str();
    crt->add_option("--u-grid", crt_grid, "points on the u interval [-2,2]")
        ->check(CLI::Range(2, 100001))
        ->capture_default_str();
    crt->add_option("--numerator", crt_numerator, "numerator data JSON (required)");
    add_output_opts(crt, out);

    auto* st = app.add_subcommand("selftest", "run the cross-module identity suite");
    (void)st;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (ab->parsed()) return run_alpha_beta(ab_n, out);
        if (qp->parsed()) return run_q_poly(qp_genus, qp_symbolic, qp_form, qp_p, out);
        if (lp->parsed()) return run_lambda_p_table(lp_n, lp_primes, lp_form, out);
        if (th->parsed()) return run_threshold(th_n, out);
        if (lpr->parsed())
            return run_lambda_pr_table(lpr_genus, lpr_r, lpr_rmax, lpr_variant, lpr_numerator,
                                       lpr_weight, lpr_primes, lpr_form, out);
        if (va->parsed()) return run_verify_appendix(va_file, va_dump, out);
        if (crt->parsed())
            return run_c_r_threshold(crt_r, crt_k, crt_hi, crt_grid, crt_numerator, out);
        if (st->parsed()) return run_selftest();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}

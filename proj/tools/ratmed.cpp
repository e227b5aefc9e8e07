#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ratmed/buchholz.hpp"
#include "ratmed/error.hpp"
#include "ratmed/exact.hpp"
#include "ratmed/family.hpp"
#include "ratmed/qrt.hpp"
#include "ratmed/search.hpp"
#include "ratmed/somos.hpp"
#include "ratmed/triangle.hpp"

using namespace ratmed;

namespace {

enum Exit { kOk = 0, kDomain = 1, kUsage = 2, kInvariant = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Minimal JSON emitter: integers are written as bare (arbitrarily long)
// numbers, rationals as "num/den" strings.
class Json {
public:
    explicit Json(std::ostream& os) : os_(os) {}

    Json& begin_object() { return open('{'); }
    Json& end_object() { return close('}'); }
    Json& begin_array() { return open('['); }
    Json& end_array() { return close(']'); }

    Json& key(std::string_view k) {
        separate();
        quote(k);
        os_ << ':';
        after_key_ = true;
        return *this;
    }

    Json& str(std::string_view s) { return raw_value([&] { quote(s); }); }
    Json& integer(const Integer& n) { return raw_value([&] { os_ << ratmed::to_string(n); }); }
    Json& number(long n) { return raw_value([&] { os_ << n; }); }
    Json& rational(const Rational& q) { return str(q.to_string()); }
    Json& boolean(bool b) { return raw_value([&] { os_ << (b ? "true" : "false"); }); }
    Json& null() { return raw_value([&] { os_ << "null"; }); }

    void newline() { os_ << '\n'; }

private:
    Json& open(char c) {
        separate();
        os_ << c;
        first_.push_back(true);
        return *this;
    }

    Json& close(char c) {
        os_ << c;
        first_.pop_back();
        return *this;
    }

    template <typename F>
    Json& raw_value(F&& emit) {
        separate();
        emit();
        return *this;
    }

    void separate() {
        if (after_key_) {
            after_key_ = false;
            return;
        }
        if (first_.empty()) return;
        if (!first_.back()) os_ << ',';
        first_.back() = false;
    }

    void quote(std::string_view s) {
        os_ << '"';
        for (char c : s) {
            if (c == '"' || c == '\\') os_ << '\\';
            os_ << c;
        }
        os_ << '"';
    }

    std::ostream& os_;
    std::vector<bool> first_;
    bool after_key_ = false;
};

Rational parse_rational(const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const DomainError&) {
        throw UsageError("not a rational number: '" + text + "'");
    }
}

Integer parse_int(const std::string& text) {
    try {
        return parse_integer(text);
    } catch (const DomainError&) {
        throw UsageError("not an integer: '" + text + "'");
    }
}

std::vector<Rational> parse_list(const std::string& text, std::size_t expected) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (expected && out.size() != expected)
        throw UsageError("expected " + std::to_string(expected) + " comma-separated values, got '" + text + "'");
    return out;
}

std::string approx(const Rational& q, int precision) {
    std::ostringstream os;
    os << std::setprecision(precision) << q.to_double();
    return os.str();
}

void emit_triple(Json& j, const SchubertTriple& s) {
    j.begin_object();
    j.key("M").rational(s.m).key("P").rational(s.p).key("X").rational(s.x);
    j.end_object();
}

// Relabelling that puts the requested median on the first side.
Triangle relabel(const Triangle& t, char median) {
    if (median == 'l') return t.rotated();
    if (median == 'm') return t.rotated().rotated();
    return t;
}

// --- somos ---------------------------------------------------------------

struct SomosArgs {
    std::string sequence = "S";
    long from = 0;
    long to = 20;
    std::string seed;
    long base = 0;
};

int cmd_somos(const SomosArgs& a) {
    if (a.to < a.from) throw UsageError("--to must not be below --from");
    std::vector<Rational> terms;
    if (a.seed.empty()) {
        if (a.from < 0) throw DomainError("canonical sequences start at index 0");
        for (long n = a.from; n <= a.to; ++n)
            terms.emplace_back(a.sequence == "T" ? canonical_T(n) : canonical_S(n));
    } else {
        SomosSequence seq(a.base, parse_list(a.seed, 0));
        if (a.from < seq.base_index())
            seq = somos5_backward(seq, static_cast<std::size_t>(seq.base_index() - a.from));
        if (a.to > seq.last_index())
            seq = somos5_extend(seq, static_cast<std::size_t>(a.to - seq.last_index()));
        for (long n = a.from; n <= a.to; ++n) terms.push_back(seq.at(n));
    }
    Json j(std::cout);
    j.begin_object();
    j.key("sequence").str(a.seed.empty() ? a.sequence : "custom");
    j.key("from").number(a.from).key("to").number(a.to);
    j.key("terms").begin_array();
    for (const auto& t : terms) j.str(t.to_string());
    j.end_array().end_object().newline();
    return kOk;
}

// --- orbit ---------------------------------------------------------------

struct OrbitArgs {
    std::string start = "1,1";
    std::size_t steps = 300;
    int precision = 12;
    std::string format = "csv";
    bool curve = false;
    std::string curve_range = "-12,12";
    std::size_t curve_samples = 2400;
};

int cmd_orbit(const OrbitArgs& a) {
    const auto uv = parse_list(a.start, 2);
    const auto points = orbit({uv[0], uv[1]}, a.steps);
    if (a.format == "json") {
        Json j(std::cout);
        j.begin_array();
        for (std::size_t n = 0; n < points.size(); ++n) {
            j.begin_object();
            j.key("n").number(static_cast<long>(n)).key("U").rational(points[n].u).key("V").rational(points[n].v);
            j.key("J").rational(invariant_J(points[n]));
            j.end_object();
        }
        j.end_array().newline();
        return kOk;
    }
    std::cout << "n,U_approx,V_approx,J\n";
    for (std::size_t n = 0; n < points.size(); ++n)
        std::cout << n << ',' << approx(points[n].u, a.precision) << ',' << approx(points[n].v, a.precision) << ','
                  << invariant_J(points[n]).to_string() << '\n';
    if (a.curve) {
        const auto range = parse_list(a.curve_range, 2);
        if (!(range[0] < range[1])) throw UsageError("--curve-range needs lo < hi");
        if (a.curve_samples < 1) throw UsageError("--curve-samples must be positive");
        std::cout << "\nU_approx,V_approx\n";
        const Rational step = (range[1] - range[0]) / Rational(a.curve_samples);
        for (std::size_t i = 0; i <= a.curve_samples; ++i) {
            const Rational u = range[0] + step * Rational(i);
            if (u.is_zero()) continue;
            for (double v : curve_v_at(u))
                std::cout << approx(u, a.precision) << ',' << std::setprecision(a.precision) << v << '\n';
        }
    }
    return kOk;
}

// --- verify --------------------------------------------------------------

int cmd_verify(const std::vector<std::string>& sides) {
    const Triangle t(parse_rational(sides[0]), parse_rational(sides[1]), parse_rational(sides[2]));
    const auto area = heron_area(t);
    const MedianData md = medians(t);

    Json j(std::cout);
    j.begin_object();
    j.key("sides").begin_array();
    for (const auto& s : t.sides()) s.is_integer() ? j.integer(s.num()) : j.rational(s);
    j.end_array();
    j.key("area");
    if (!area)
        j.str("irrational");
    else if (area->is_integer())
        j.integer(area->num());
    else
        j.rational(*area);
    j.key("area_sq").rational(heron_area_sq(t));
    const std::array<std::pair<const char*, const std::optional<Rational>*>, 3> meds{
        {{"k", &md.k}, {"l", &md.l}, {"m", &md.m}}};
    const std::array<const Rational*, 3> sq{&md.k_sq, &md.l_sq, &md.m_sq};
    for (std::size_t i = 0; i < 3; ++i) {
        j.key(meds[i].first);
        *meds[i].second ? j.rational(**meds[i].second) : j.null();
    }
    j.key("medians_sq").begin_object();
    j.key("k").rational(*sq[0]).key("l").rational(*sq[1]).key("m").rational(*sq[2]);
    j.end_object();
    j.key("schubert").begin_object();
    if (area) {
        for (std::size_t i = 0; i < 3; ++i) {
            if (!*meds[i].second) continue;
            j.key(meds[i].first);
            emit_triple(j, schubert_from_triangle(relabel(t, meds[i].first[0]), **meds[i].second, *area));
        }
    }
    j.end_object();
    j.end_object().newline();
    return kOk;
}

// --- params --------------------------------------------------------------

int cmd_params(const std::vector<std::string>& sides) {
    const Triangle t(parse_rational(sides[0]), parse_rational(sides[1]), parse_rational(sides[2]));
    const MedianData md = medians(t);
    if (!md.k || !md.l) throw DomainError("params needs a triangle whose a- and b-medians are rational");
    const auto pairs = params_from_triangle(t, *md.k, *md.l);
    static constexpr const char* kSigns[] = {"++", "+-", "-+", "--"};

    Json j(std::cout);
    j.begin_object();
    j.key("k").rational(*md.k).key("l").rational(*md.l);
    j.key("pairs").begin_array();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const ParamPoint& p = pairs[i];
        j.begin_object();
        j.key("signs").str(kSigns[i]);
        j.key("theta").rational(p.theta).key("phi").rational(p.phi);
        j.key("constraints").boolean(constraints_ok(p));
        j.key("c4_residual").rational(c4_residual(p));
        j.key("on_c4").boolean(c4_residual(p).is_zero());
        j.key("regenerates").boolean(proportional_in_order(buchholz_sides(p, 1), t));
        j.end_object();
    }
    j.end_array().end_object().newline();
    return kOk;
}

// --- family --------------------------------------------------------------

struct FamilyArgs {
    long from = 1;
    long to = 5;
    std::string format = "json";
    bool factors = false;
};

// Display width in code points; factorizations contain the two-byte '·'.
std::size_t display_width(const std::string& s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

void print_aligned(const std::vector<std::vector<std::string>>& rows, std::ostream& os = std::cout) {
    std::vector<std::size_t> width;
    for (const auto& r : rows) {
        width.resize(std::max(width.size(), r.size()));
        for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], display_width(r[i]));
    }
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i) line += "  ";
            line += std::string(width[i] - display_width(r[i]), ' ') + r[i];
        }
        os << line << '\n';
    }
}

int cmd_family(const FamilyArgs& a) {
    if (a.from < 1 || a.to < a.from) throw UsageError("need 1 <= --from <= --to");
    if (a.format == "text") {
        std::vector<std::vector<std::string>> rows;
        if (a.factors) {
            rows.push_back({"n", "s", "s-a", "s-b", "s-c", "area"});
            for (long n = a.from; n <= a.to; ++n) {
                const FactorRow r = factor_table_row(n);
                rows.push_back({std::to_string(n), r.s.to_string(), r.s_minus_a.to_string(),
                                r.s_minus_b.to_string(), r.s_minus_c.to_string(), r.area.to_string()});
            }
        } else {
            rows.push_back({"n", "a", "b", "c", "k", "l", "area"});
            for (long n = a.from; n <= a.to; ++n) {
                const FamilyTriangle f = family_triangle(n);
                rows.push_back({std::to_string(n), to_string(f.a), to_string(f.b), to_string(f.c), f.k.to_string(),
                                f.l.to_string(), to_string(f.area)});
            }
        }
        print_aligned(rows);
        return kOk;
    }
    std::cout << "[\n";
    for (long n = a.from; n <= a.to; ++n) {
        Json j(std::cout);
        j.begin_object();
        j.key("n").number(n);
        if (a.factors) {
            const FactorRow r = factor_table_row(n);
            j.key("s").str(r.s.to_string()).key("s_minus_a").str(r.s_minus_a.to_string());
            j.key("s_minus_b").str(r.s_minus_b.to_string()).key("s_minus_c").str(r.s_minus_c.to_string());
            j.key("area").str(r.area.to_string());
        } else {
            const FamilyTriangle f = family_triangle(n);
            j.key("a").integer(f.a).key("b").integer(f.b).key("c").integer(f.c);
            j.key("k").rational(f.k).key("l").rational(f.l).key("area").integer(f.area);
        }
        j.end_object();
        std::cout << (n < a.to ? ",\n" : "\n");
    }
    std::cout << "]\n";
    return kOk;
}

// --- schubert ------------------------------------------------------------

struct SchubertArgs {
    std::vector<std::string> triangle;
    std::vector<std::string> triple;
    std::string median = "k";
    std::string scale = "1";
    bool normalize = false;
};

int cmd_schubert(const SchubertArgs& a) {
    Json j(std::cout);
    if (!a.triangle.empty()) {
        const Triangle t(parse_rational(a.triangle[0]), parse_rational(a.triangle[1]), parse_rational(a.triangle[2]));
        const Triangle r = relabel(t, a.median[0]);
        const auto area = heron_area(r);
        if (!area) throw DomainError("the triangle has irrational area");
        const auto k = medians(r).k;
        if (!k) throw DomainError("median " + a.median + " is irrational");
        SchubertTriple s = schubert_from_triangle(r, *k, *area);
        if (a.normalize) s = schubert_normalize(s);
        j.begin_object();
        j.key("median").str(a.median).key("triple");
        emit_triple(j, s);
        j.key("residual").rational(schubert_residual(s)).key("geometric").boolean(is_geometric(s));
        j.end_object().newline();
        return kOk;
    }
    SchubertTriple s{parse_rational(a.triple[0]), parse_rational(a.triple[1]), parse_rational(a.triple[2])};
    if (a.normalize) s = schubert_normalize(s);
    const SchubertTriangle out = triangle_from_schubert(s, parse_rational(a.scale));
    j.begin_object();
    j.key("triple");
    emit_triple(j, s);
    j.key("a").rational(out.triangle.a()).key("b").rational(out.triangle.b()).key("c").rational(out.triangle.c());
    j.key("k").rational(out.k).key("area").rational(out.area);
    j.end_object().newline();
    return kOk;
}

// --- search --------------------------------------------------------------

struct SearchArgs {
    int height = 0;
    int workers = 1;
    std::size_t chunk_size = 1024;
    std::string checkpoint;
    bool resume = false;
    std::size_t stop_after = 0;
};

int cmd_search(const SearchArgs& a) {
    SearchConfig cfg;
    cfg.height = a.height;
    cfg.workers = a.workers;
    cfg.chunk_size = a.chunk_size;
    if (!a.checkpoint.empty()) cfg.checkpoint_path = a.checkpoint;
    cfg.resume = a.resume;
    if (a.stop_after) cfg.stop_after_chunks = a.stop_after;
    const SearchResult r = run_search(cfg);
    for (const auto& t : r.triangles) std::cout << to_json_line(t) << '\n';
    std::cout.flush();

    std::vector<std::vector<std::string>> rows{{"class", "a", "b", "c", "area", "theta", "phi"}};
    for (const auto& t : r.triangles)
        rows.push_back({t.classification->to_string(), to_string(t.sides[0]), to_string(t.sides[1]),
                        to_string(t.sides[2]), to_string(t.area), t.source.theta.to_string(),
                        t.source.phi.to_string()});
    std::cerr << "height " << a.height << ": " << r.candidates << " candidates, " << r.triangles.size()
              << " triangles, chunks " << r.chunks_done << "/" << r.chunks_total
              << (r.complete() ? "" : " (incomplete)") << "\n";
    if (!r.triangles.empty()) print_aligned(rows, std::cerr);
    return kOk;
}

// --- factor --------------------------------------------------------------

int cmd_factor(const std::vector<std::string>& numbers, const std::string& format) {
    std::vector<std::pair<Integer, Factorization>> rows;
    for (const auto& text : numbers) {
        Integer n = parse_int(text);
        Factorization f = factorize(n);
        rows.emplace_back(std::move(n), std::move(f));
    }
    if (format == "text") {
        for (const auto& [n, f] : rows) std::cout << to_string(n) << " = " << f.to_string() << '\n';
        return kOk;
    }
    Json j(std::cout);
    j.begin_array();
    for (const auto& [n, f] : rows) {
        j.begin_object();
        j.key("n").integer(n).key("factors").str(f.to_string()).key("prime").boolean(is_prime(n));
        j.end_object();
    }
    j.end_array().newline();
    return kOk;
}

int default_workers() {
    if (const char* env = std::getenv("RATMED_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<int>(v);
        throw UsageError(std::string("RATMED_WORKERS must be a positive integer, got '") + env + "'");
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

int run(int argc, char** argv) {
    CLI::App app{"Exact arithmetic for Heron triangles with two rational medians"};
    app.require_subcommand(1);

    SomosArgs somos;
    auto* c_somos = app.add_subcommand("somos", "Terms of the canonical or a custom Somos-5 sequence");
    c_somos->add_option("--sequence", somos.sequence, "Canonical sequence")->capture_default_str()->check(CLI::IsMember({"S", "T"}));
    c_somos->add_option("--from", somos.from, "First index")->capture_default_str();
    c_somos->add_option("--to", somos.to, "Last index")->capture_default_str();
    c_somos->add_option("--seed", somos.seed, "Comma-separated custom seed (five or more terms)");
    c_somos->add_option("--base", somos.base, "Index of the first seed term")->capture_default_str();

    OrbitArgs orbit_args;
    auto* c_orbit = app.add_subcommand("orbit", "QRT orbit as CSV (or exact JSON)");
    c_orbit->add_option("--start", orbit_args.start, "Starting point U,V")->capture_default_str();
    c_orbit->add_option("--steps", orbit_args.steps, "Number of map iterations")->capture_default_str();
    c_orbit->add_option("--precision", orbit_args.precision, "Significant digits of float columns")->capture_default_str()
        ->check(CLI::Range(1, 40));
    c_orbit->add_option("--format", orbit_args.format)->capture_default_str()->check(CLI::IsMember({"csv", "json"}));
    c_orbit->add_flag("--curve", orbit_args.curve, "Append a sampling of the J = 5 curve");
    c_orbit->add_option("--curve-range", orbit_args.curve_range, "U range lo,hi of the curve sampling")->capture_default_str();
    c_orbit->add_option("--curve-samples", orbit_args.curve_samples, "Number of U steps")->capture_default_str();

    std::vector<std::string> verify_sides;
    auto* c_verify = app.add_subcommand("verify", "Heron, median and Schubert report for a triangle");
    c_verify->add_option("sides", verify_sides, "a b c")->expected(3)->required();

    std::vector<std::string> params_sides;
    auto* c_params = app.add_subcommand("params", "The four (theta, phi) pairs of a triangle");
    c_params->add_option("sides", params_sides, "a b c")->expected(3)->required();

    FamilyArgs family;
    auto* c_family = app.add_subcommand("family", "Rows of the Somos-5 triangle family");
    c_family->add_option("--from", family.from)->capture_default_str();
    c_family->add_option("--to", family.to)->capture_default_str();
    c_family->add_option("--format", family.format)->capture_default_str()->check(CLI::IsMember({"json", "text"}));
    c_family->add_flag("--factors", family.factors, "Factorizations of s, s-a, s-b, s-c and the area");

    SchubertArgs schub;
    auto* c_schub = app.add_subcommand("schubert", "Schubert triple from a triangle, or a triangle from a triple");
    auto* o_tri = c_schub->add_option("--triangle", schub.triangle, "a b c")->expected(3);
    auto* o_triple = c_schub->add_option("--triple", schub.triple, "M P X")->expected(3);
    o_tri->excludes(o_triple);
    c_schub->add_option("--median", schub.median, "Median for --triangle")->capture_default_str()->check(CLI::IsMember({"k", "l", "m"}));
    c_schub->add_option("--scale", schub.scale, "Length of side c for --triple");
    c_schub->add_flag("--normalize", schub.normalize, "Map the triple to its geometric representative");

    SearchArgs search;
    search.workers = 0;
    auto* c_search = app.add_subcommand("search", "Bounded-height search for two-rational-median Heron triangles");
    c_search->add_option("--height", search.height, "Largest denominator of theta and phi")->required();
    c_search->add_option("--workers", search.workers, "Worker threads (default: $RATMED_WORKERS or all cores)")
        ->check(CLI::PositiveNumber);
    c_search->add_option("--chunk-size", search.chunk_size, "Theta values per work chunk")->capture_default_str()->check(CLI::PositiveNumber);
    c_search->add_option("--checkpoint", search.checkpoint, "Append-only progress log");
    c_search->add_flag("--resume", search.resume, "Continue from --checkpoint");
    c_search->add_option("--stop-after", search.stop_after, "Process at most this many chunks, then stop");

    std::vector<std::string> factor_numbers;
    std::string factor_format = "json";
    auto* c_factor = app.add_subcommand("factor", "Prime factorization");
    c_factor->add_option("numbers", factor_numbers, "Positive integers")->required();
    c_factor->add_option("--format", factor_format)->capture_default_str()->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    if (c_somos->parsed()) return cmd_somos(somos);
    if (c_orbit->parsed()) return cmd_orbit(orbit_args);
    if (c_verify->parsed()) return cmd_verify(verify_sides);
    if (c_params->parsed()) return cmd_params(params_sides);
    if (c_family->parsed()) return cmd_family(family);
    if (c_schub->parsed()) {
        if (schub.triangle.empty() == schub.triple.empty()) throw UsageError("schubert needs --triangle or --triple");
        return cmd_schubert(schub);
    }
    if (c_search->parsed()) {
        if (search.workers == 0) search.workers = default_workers();
        if (search.resume && search.checkpoint.empty()) throw UsageError("--resume needs --checkpoint");
        return cmd_search(search);
    }
    if (c_factor->parsed()) return cmd_factor(factor_numbers, factor_format);
    return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kInvariant;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomain;
    }
}

#include "ratmed/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iostream>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "ratmed/checkpoint.hpp"
#include "ratmed/error.hpp"
#include "ratmed/family.hpp"

namespace ratmed {

namespace {

using u128 = unsigned __int128;

// Side polynomials times q^2 t^2 stay below 14 * height^4, so int64 is safe
// up to this height; beyond it every candidate takes the exact path.
constexpr int kFastHeightLimit = 16384;

struct Frac {
    std::int64_t num;
    std::int64_t den;
};

// Fractions in (0, 1) with denominator <= height, ordered by (den, num).
std::vector<Frac> fractions_by_denominator(int height) {
    std::vector<Frac> out;
    for (std::int64_t q = 2; q <= height; ++q)
        for (std::int64_t p = 1; p < q; ++p)
            if (std::gcd(p, q) == 1) out.push_back({p, q});
    return out;
}

// phi + 2 theta > 1 with theta = p/q, phi = r/t.
bool constraint_holds(const Frac& theta, const Frac& phi) {
    return phi.num * theta.den > phi.den * (theta.den - 2 * theta.num);
}

template <unsigned Mod>
constexpr std::array<bool, Mod> square_residues() {
    std::array<bool, Mod> table{};
    for (unsigned i = 0; i < Mod; ++i) table[(i * i) % Mod] = true;
    return table;
}

constexpr auto kSq64 = square_residues<64>();
constexpr auto kSq63 = square_residues<63>();
constexpr auto kSq65 = square_residues<65>();
constexpr auto kSq11 = square_residues<11>();

unsigned bit_length(u128 n) {
    const auto hi = static_cast<std::uint64_t>(n >> 64);
    if (hi) return 128 - static_cast<unsigned>(__builtin_clzll(hi));
    const auto lo = static_cast<std::uint64_t>(n);
    return lo ? 64 - static_cast<unsigned>(__builtin_clzll(lo)) : 0;
}

struct ChunkOutput {
    std::vector<FoundTriangle> finds;
    std::uint64_t candidates = 0;
};

void require_height(int height) {
    if (height < 2) throw DomainError("search height must be >= 2, got " + std::to_string(height));
}

ParamPoint to_param(const Frac& theta, const Frac& phi) {
    return {Rational(Integer(static_cast<long>(theta.num)), Integer(static_cast<long>(theta.den))),
            Rational(Integer(static_cast<long>(phi.num)), Integer(static_cast<long>(phi.den)))};
}

FoundTriangle confirmed_hit(const ParamPoint& p) {
    auto found = test_candidate(p);
    if (!found)
        throw InvariantViolation("integer screen and exact check disagree at theta=" + p.theta.to_string() +
                                 ", phi=" + p.phi.to_string());
    return std::move(*found);
}

ChunkOutput run_chunk(const std::vector<Frac>& fracs, std::size_t begin, std::size_t end, int height) {
    ChunkOutput out;
    const bool fast = height <= kFastHeightLimit;
    for (std::size_t i = begin; i < end; ++i) {
        const Frac& theta = fracs[i];
        for (const Frac& phi : fracs) {
            if (!constraint_holds(theta, phi)) continue;
            ++out.candidates;
            if (fast) {
                if (detail::screen_candidate(theta.num, theta.den, phi.num, phi.den))
                    out.finds.push_back(confirmed_hit(to_param(theta, phi)));
            } else if (auto found = test_candidate(to_param(theta, phi))) {
                out.finds.push_back(std::move(*found));
            }
        }
    }
    return out;
}

ChunkRecord to_record(std::size_t id, const ChunkOutput& out) {
    ChunkRecord r;
    r.id = id;
    r.candidates = out.candidates;
    for (const auto& f : out.finds) r.finds.push_back(f.source);
    return r;
}

ChunkOutput from_record(const ChunkRecord& r) {
    ChunkOutput out;
    out.candidates = r.candidates;
    for (const auto& p : r.finds) {
        std::optional<FoundTriangle> found;
        try {
            found = test_candidate(p);
        } catch (const DomainError&) {
        }
        if (!found)
            throw ResumeError("checkpoint chunk " + std::to_string(r.id) + " lists a non-Heron point " +
                              p.theta.to_string() + ":" + p.phi.to_string());
        out.finds.push_back(std::move(*found));
    }
    return out;
}

}  // namespace

std::string Classification::to_string() const {
    return kind == Kind::Family ? "family:" + std::to_string(family_index) : "sporadic";
}

std::array<Integer, 3> FoundTriangle::sorted_sides() const {
    auto s = sides;
    std::sort(s.begin(), s.end());
    return s;
}

const Integer& FoundTriangle::max_side() const { return *std::max_element(sides.begin(), sides.end()); }

void enumerate_params(int height, const std::function<void(const ParamPoint&)>& visit) {
    require_height(height);
    const auto fracs = fractions_by_denominator(height);
    for (const Frac& theta : fracs)
        for (const Frac& phi : fracs)
            if (constraint_holds(theta, phi)) visit(to_param(theta, phi));
}

std::vector<ParamPoint> enumerate_params(int height) {
    std::vector<ParamPoint> out;
    enumerate_params(height, [&out](const ParamPoint& p) { out.push_back(p); });
    return out;
}

std::uint64_t count_params(int height) {
    require_height(height);
    const auto fracs = fractions_by_denominator(height);
    std::uint64_t n = 0;
    for (const Frac& theta : fracs)
        for (const Frac& phi : fracs) n += constraint_holds(theta, phi);
    return n;
}

std::optional<FoundTriangle> test_candidate(const ParamPoint& p) {
    if (!constraints_ok(p))
        throw DomainError("test_candidate needs a point with 0 < theta, phi < 1 and phi + 2 theta > 1");
    const Integer& q = p.theta.den();
    const Integer& t = p.phi.den();
    const Integer tau = q * q * t * t;
    const auto raw = buchholz_sides(p, tau);
    std::array<Integer, 3> s;
    for (int i = 0; i < 3; ++i) {
        if (!raw[i].is_integer() || raw[i].sign() <= 0) return std::nullopt;
        s[i] = raw[i].num();
    }
    const Integer g = gcd(gcd(s[0], s[1]), s[2]);
    for (auto& x : s) x /= g;
    const Integer& a = s[0];
    const Integer& b = s[1];
    const Integer& c = s[2];
    if (a >= b + c || b >= c + a || c >= a + b) return std::nullopt;

    // 16 area^2 = (a+b+c)(-a+b+c)(a-b+c)(a+b-c).
    const Integer sixteen_area_sq = Integer(a + b + c) * Integer(b + c - a) * Integer(a - b + c) * Integer(a + b - c);
    const SqrtResult root = int_sqrt(sixteen_area_sq);
    if (!root.exact) return std::nullopt;
    if (!mpz_divisible_ui_p(root.root.get_mpz_t(), 4))
        throw InvariantViolation("integer Heron triangle with non-integral area");

    const Integer k_sq4 = 2 * b * b + 2 * c * c - a * a;
    const Integer l_sq4 = 2 * c * c + 2 * a * a - b * b;
    const SqrtResult k2 = int_sqrt(k_sq4);
    const SqrtResult l2 = int_sqrt(l_sq4);
    if (!k2.exact || !l2.exact)
        throw InvariantViolation("parametrized Heron triangle (" + to_string(a) + ", " + to_string(b) + ", " +
                                 to_string(c) + ") lacks a rational a- or b-median");

    FoundTriangle f;
    f.sides = s;
    f.k = Rational(k2.root, 2);
    f.l = Rational(l2.root, 2);
    f.area = root.root / 4;
    f.source = p;
    return f;
}

long family_bound_for(const Integer& max_side) {
    for (long n = 1;; ++n) {
        const FamilyTriangle ft = family_triangle(n);
        if (std::min({ft.a, ft.b, ft.c}) > max_side) return n;
    }
}

Classification classify(const FoundTriangle& t, long family_bound) {
    if (family_bound < 1) throw DomainError("family_bound must be >= 1");
    const FamilyTriangle last = family_triangle(family_bound);
    if (std::min({last.a, last.b, last.c}) <= t.max_side())
        throw DomainError("family_bound " + std::to_string(family_bound) +
                          " is too small to classify a triangle with largest side " + to_string(t.max_side()));
    const auto key = t.sorted_sides();
    for (long n = 1; n <= family_bound; ++n) {
        const FamilyTriangle ft = family_triangle(n);
        std::array<Integer, 3> fs{ft.a, ft.b, ft.c};
        std::sort(fs.begin(), fs.end());
        if (fs == key) return {Classification::Kind::Family, n};
    }
    return {Classification::Kind::Sporadic, 0};
}

SearchResult run_search(const SearchConfig& cfg) {
    require_height(cfg.height);
    if (cfg.workers < 1) throw DomainError("workers must be >= 1");
    if (cfg.chunk_size < 1) throw DomainError("chunk_size must be >= 1");
    if (cfg.resume && !cfg.checkpoint_path) throw DomainError("resume needs a checkpoint path");

    const auto fracs = fractions_by_denominator(cfg.height);
    const std::size_t chunks = (fracs.size() + cfg.chunk_size - 1) / cfg.chunk_size;
    const CheckpointHeader header{cfg.height, cfg.chunk_size, chunks};

    std::vector<std::optional<ChunkOutput>> outputs(chunks);
    std::vector<ChunkRecord> records;
    std::optional<CheckpointWriter> writer;
    if (cfg.checkpoint_path) {
        if (cfg.resume) {
            CheckpointState state = load_checkpoint(*cfg.checkpoint_path, header);
            if (state.dropped_torn_tail)
                std::cerr << "ratmed: dropped a torn final line from " << cfg.checkpoint_path->string() << "\n";
            for (auto& r : state.chunks) outputs[r.id] = from_record(r);
            records = state.chunks;
            writer.emplace(CheckpointWriter::reopen(*cfg.checkpoint_path, state));
        } else {
            writer.emplace(CheckpointWriter::create(*cfg.checkpoint_path, header));
        }
    }

    std::vector<std::size_t> pending;
    for (std::size_t id = 0; id < chunks; ++id)
        if (!outputs[id]) pending.push_back(id);
    std::size_t budget = pending.size();
    if (cfg.stop_after_chunks) budget = std::min(budget, *cfg.stop_after_chunks);

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t ticket = next.fetch_add(1);
            if (ticket >= budget || failed.load()) return;
            const std::size_t id = pending[ticket];
            try {
                ChunkOutput out = run_chunk(fracs, id * cfg.chunk_size,
                                            std::min(fracs.size(), (id + 1) * cfg.chunk_size), cfg.height);
                ChunkRecord rec = to_record(id, out);
                if (writer) writer->append(rec);
                std::lock_guard lock(mutex);
                outputs[id] = std::move(out);
                records.push_back(std::move(rec));
            } catch (...) {
                std::lock_guard lock(mutex);
                if (!error) error = std::current_exception();
                failed = true;
                return;
            }
        }
    };
    const int threads = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(cfg.workers), std::max<std::size_t>(budget, 1)));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);

    SearchResult result;
    result.chunks_total = chunks;
    // First occurrence in enumeration order wins; chunks are scanned in id
    // order, so the choice does not depend on scheduling.
    std::map<std::array<Integer, 3>, FoundTriangle> unique;
    for (auto& out : outputs) {
        if (!out) continue;
        ++result.chunks_done;
        result.candidates += out->candidates;
        for (auto& f : out->finds) unique.try_emplace(f.sorted_sides(), std::move(f));
    }
    if (writer && result.complete()) {
        writer.reset();
        compact_checkpoint(*cfg.checkpoint_path, header, records);
    }
    for (auto& [key, f] : unique) {
        f.classification = classify(f, family_bound_for(f.max_side()));
        result.triangles.push_back(std::move(f));
    }
    std::sort(result.triangles.begin(), result.triangles.end(), [](const FoundTriangle& x, const FoundTriangle& y) {
        if (x.area != y.area) return x.area < y.area;
        return x.sorted_sides() < y.sorted_sides();
    });
    return result;
}

std::string to_json_line(const FoundTriangle& t) {
    std::string out = "{\"a\":" + to_string(t.sides[0]) + ",\"b\":" + to_string(t.sides[1]) +
                      ",\"c\":" + to_string(t.sides[2]) + ",\"k\":\"" + t.k.to_string() + "\",\"l\":\"" +
                      t.l.to_string() + "\",\"area\":" + to_string(t.area) + ",\"theta\":\"" +
                      t.source.theta.to_string() + "\",\"phi\":\"" + t.source.phi.to_string() + "\",\"class\":\"" +
                      (t.classification ? t.classification->to_string() : "unclassified") + "\"}";
    return out;
}

namespace detail {

bool is_square_u128(u128 n) {
    if (!kSq64[static_cast<unsigned>(n & 63)]) return false;
    if (!kSq63[static_cast<unsigned>(n % 63)]) return false;
    if (!kSq65[static_cast<unsigned>(n % 65)]) return false;
    if (!kSq11[static_cast<unsigned>(n % 11)]) return false;
    if (n < 2) return true;
    u128 x = u128{1} << ((bit_length(n) + 1) / 2);
    for (;;) {
        const u128 y = (x + n / x) >> 1;
        if (y >= x) break;
        x = y;
    }
    return x * x == n;
}

bool screen_candidate(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t t) {
    const std::int64_t pp = p * p, qq = q * q, rr = r * r, tt = t * t;
    const std::int64_t prt = p * r * t;
    const std::int64_t pqrt2 = 2 * p * q * r * t;
    std::int64_t a = -2 * pp * r * t - p * rr * q + pqrt2 - qq * rr + p * q * tt + qq * tt;
    std::int64_t b = p * prt + 2 * p * q * rr - pp * tt + pqrt2 - qq * r * t + qq * tt;
    std::int64_t c = p * prt - p * q * rr + pp * tt + pqrt2 + qq * rr + p * q * tt - qq * r * t;
    if (a <= 0 || b <= 0 || c <= 0) return false;
    const std::int64_t g = std::gcd(std::gcd(a, b), c);
    a /= g;
    b /= g;
    c /= g;
    if (a >= b + c || b >= c + a || c >= a + b) return false;
    const u128 f1 = static_cast<u128>(a + b + c);
    const u128 f2 = static_cast<u128>(b + c - a);
    const u128 f3 = static_cast<u128>(a - b + c);
    const u128 f4 = static_cast<u128>(a + b - c);
    u128 prod;
    if (__builtin_mul_overflow(f1, f2, &prod) || __builtin_mul_overflow(prod, f3, &prod) ||
        __builtin_mul_overflow(prod, f4, &prod)) {
        auto exact = test_candidate(to_param({p, q}, {r, t}));
        return exact.has_value();
    }
    return is_square_u128(prod);
}

}  // namespace detail

}  // namespace ratmed

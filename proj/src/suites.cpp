#include "qbundle/suites.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <memory>
#include <random>
#include <set>
#include <sstream>

namespace qb {

using ojson = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Configuration

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(std::string v) {
    v.erase(std::remove_if(v.begin(), v.end(), [](char ch) { return ch == '[' || ch == ']' || ch == ' ' || ch == '\t'; }),
            v.end());
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

long long parse_int(const std::string& key, const std::string& v) {
    std::size_t pos = 0;
    long long x = 0;
    try {
        x = std::stoll(v, &pos);
    } catch (const std::exception&) {
        throw ConfigError(key + ": not an integer: '" + v + "'");
    }
    if (pos != v.size()) throw ConfigError(key + ": not an integer: '" + v + "'");
    return x;
}

int parse_small(const std::string& key, const std::string& v) {
    const long long x = parse_int(key, v);
    if (x < -1000000 || x > 1000000) throw ConfigError(key + ": out of range");
    return static_cast<int>(x);
}

std::vector<int> parse_ints(const std::string& key, const std::string& v) {
    std::vector<int> out;
    for (const auto& s : split_list(v)) out.push_back(parse_small(key, s));
    return out;
}

std::string list_text(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

}  // namespace

void RunConfig::set(const std::string& key_in, const std::string& value_in) {
    const std::string key = trim(key_in), v = trim(value_in);
    if (key == "algebra") {
        algebra = v;
    } else if (key == "theta") {
        theta = parse_ints(key, v);
    } else if (key == "weights") {
        weights = parse_ints(key, v);
    } else if (key == "level") {
        level = parse_small(key, v);
    } else if (key == "calculus") {
        calculus = parse_small(key, v);
    } else if (key == "samples") {
        samples.clear();
        for (const auto& s : split_list(v)) {
            mpq_class x;
            if (x.set_str(s, 10) != 0) throw ConfigError("samples: not a rational: '" + s + "'");
            x.canonicalize();
            samples.push_back(x);
        }
    } else if (key == "seed") {
        const long long x = parse_int(key, v);
        if (x < 0) throw ConfigError("seed: must be non-negative");
        seed = static_cast<std::uint64_t>(x);
    } else if (key == "suite") {
        suite = v;
    } else if (key == "action_samples") {
        action_samples = parse_small(key, v);
    } else if (key == "haar_samples") {
        haar_samples = parse_small(key, v);
    } else if (key == "calculus_samples") {
        calculus_samples = parse_small(key, v);
    } else if (key == "connection_samples") {
        connection_samples = parse_small(key, v);
    } else if (key == "perturbations") {
        perturbations = parse_small(key, v);
    } else if (key == "timing") {
        if (v == "true" || v == "1")
            timing = true;
        else if (v == "false" || v == "0")
            timing = false;
        else
            throw ConfigError("timing: expected true or false");
    } else {
        throw ConfigError("unknown key '" + key + "'");
    }
}

void RunConfig::validate() const {
    if (algebra != "sl2") throw ConfigError("algebra: only sl2 is implemented, got '" + algebra + "'");
    std::set<int> seen;
    for (int j : theta) {
        if (j != 1) throw ConfigError("theta: index " + std::to_string(j) + " outside 1..1");
        if (!seen.insert(j).second) throw ConfigError("theta: repeated index");
    }
    if (weights.empty()) throw ConfigError("weights: empty");
    if (level < 1) throw ConfigError("level: must be at least 1");
    if (level > 8) throw ConfigError("level: windows above 8 are not supported");
    if (calculus < 1 || calculus > 2) throw ConfigError("calculus: irrep index must be 1 or 2");
    if (samples.empty()) throw ConfigError("samples: empty");
    for (const auto& s : samples)
        if (s <= 0 || s >= 1) throw ConfigError("samples: " + s.get_str() + " outside (0, 1)");
    for (int n : {action_samples, haar_samples, calculus_samples, connection_samples, perturbations})
        if (n < 0) throw ConfigError("sample counts must be non-negative");
    if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
        throw ConfigError("suite: unknown '" + suite + "'");
}

ojson RunConfig::to_json() const {
    ojson j;
    j["algebra"] = algebra;
    j["theta"] = theta;
    j["weights"] = weights;
    j["level"] = level;
    j["calculus"] = calculus;
    std::vector<std::string> s;
    for (const auto& x : samples) s.push_back(x.get_str());
    j["samples"] = s;
    j["seed"] = seed;
    j["suite"] = suite;
    j["action_samples"] = action_samples;
    j["haar_samples"] = haar_samples;
    j["calculus_samples"] = calculus_samples;
    j["connection_samples"] = connection_samples;
    j["perturbations"] = perturbations;
    return j;
}

RunConfig parse_config(const std::string& text) {
    RunConfig c;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        c.set(line.substr(0, eq), line.substr(eq + 1));
    }
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

// ---------------------------------------------------------------------------
// Report

std::size_t Report::count(Status s) const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [s](const Check& c) { return c.status == s; }));
}

int Report::exit_code() const { return count(Status::Pass) == checks.size() ? 0 : 1; }

ojson Report::to_json() const {
    ojson j;
    j["command"] = "verify";
    j["config"] = config.to_json();
    ojson list = ojson::array();
    for (const auto& c : checks) {
        ojson e;
        e["suite"] = c.suite;
        e["name"] = c.name;
        e["anchor"] = c.anchor;
        e["status"] = c.status == Status::Pass ? "pass" : c.status == Status::Fail ? "fail" : "skipped";
        if (!c.witness.empty()) e["witness"] = c.witness;
        if (!c.detail.is_null()) e["detail"] = c.detail;
        if (config.timing) e["seconds"] = c.seconds;
        list.push_back(std::move(e));
    }
    j["checks"] = std::move(list);
    j["summary"] = {{"pass", count(Status::Pass)}, {"fail", count(Status::Fail)}, {"skipped", count(Status::Skip)}};
    return j;
}

ojson coeff_to_json(const CoeffElement& f) { return ojson::parse(qb::to_json(f)); }

ojson form_to_json(const Calculus& c, const FormElement& w) {
    ojson out = ojson::array();
    const auto& words = c.algebra().words(w.degree);
    for (std::size_t s = 0; s < w.coords.size(); ++s) {
        if (w.coords[s].is_zero()) continue;
        ojson e;
        e["word"] = w.reduced ? words[s] : std::vector<int>{static_cast<int>(s)};
        e["coeff"] = coeff_to_json(w.coords[s]);
        out.push_back(std::move(e));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Suites

namespace {

struct Outcome {
    Status status = Status::Pass;
    std::string witness;
    ojson detail;
};

Outcome pass(ojson detail = {}) { return {Status::Pass, "", std::move(detail)}; }
Outcome fail(std::string why, ojson detail = {}) { return {Status::Fail, std::move(why), std::move(detail)}; }
Outcome skip(std::string why) { return {Status::Skip, std::move(why), {}}; }
Outcome expect(bool ok, const std::string& why, ojson detail = {}) {
    return ok ? pass(std::move(detail)) : fail(why, std::move(detail));
}

using Rng = std::mt19937_64;

int pick(Rng& rng, int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); }

Rng suite_rng(std::uint64_t seed, const std::string& suite) {
    std::uint64_t h = 1469598103934665603ull;
    for (char ch : suite) h = (h ^ static_cast<unsigned char>(ch)) * 1099511628211ull;
    return Rng(seed ^ h);
}

Scalar small_scalar(Rng& rng) {
    int c = pick(rng, -3, 3);
    if (c == 0) c = 1;
    return Scalar(c) * Scalar::u_pow(pick(rng, -2, 2));
}

UEAElement random_uea(Rng& rng, int degree) {
    const auto monos = pbw_monomials(degree);
    UEAElement x;
    for (int t = 0; t < 3; ++t)
        x.add_term(monos[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(monos.size()) - 1))], small_scalar(rng));
    if (x.is_zero()) x = UEAElement::e();
    return x;
}

CoeffElement random_coeff(Rng& rng, int level) {
    CoeffElement f;
    for (int t = 0; t < 3; ++t) {
        const int n = pick(rng, 0, level);
        f.add_term({n, pick(rng, 0, n), pick(rng, 0, n)}, small_scalar(rng));
    }
    if (f.is_zero()) f = CoeffElement::t(level, 0, 0);
    return f;
}

CoeffElement random_combination(Rng& rng, const std::vector<CoeffElement>& basis) {
    CoeffElement a;
    for (const auto& b : basis) {
        const int c = pick(rng, -2, 2);
        if (c != 0) a += b * Scalar(c);
    }
    if (a.is_zero()) a = basis.back();
    return a;
}

FormElement random_form(Rng& rng, const Calculus& c, int degree, int level) {
    FormElement w = c.zero(degree);
    for (auto& x : w.coords)
        if (rng() % 2 == 0) x = random_coeff(rng, level);
    if (w.is_zero()) w.coords[0] = random_coeff(rng, level);
    return w;
}

std::string theta_text(const ThetaChoice& t) { return "{" + list_text(t.subset) + "}"; }

/// Shared expensive objects, built on first use.
struct Context {
    const RunConfig& cfg;
    std::unique_ptr<Calculus> calc;
    std::unique_ptr<Bundle> bundle;
    const Calculus& calculus() {
        if (!calc) calc = std::make_unique<Calculus>(from_rep(irrep(cfg.calculus)));
        return *calc;
    }
    const Bundle& line() {
        if (!bundle) bundle = std::make_unique<Bundle>(LModule::from_weights(cfg.weights));
        return *bundle;
    }
};

class Runner {
public:
    Runner(Report& r, std::string suite, std::string anchor) : r_(r), suite_(std::move(suite)), anchor_(std::move(anchor)) {}

    void run(const std::string& name, const std::function<Outcome()>& fn) { run(name, anchor_, fn); }
    void run(const std::string& name, const std::string& anchor, const std::function<Outcome()>& fn) {
        Check c;
        c.suite = suite_;
        c.name = name;
        c.anchor = anchor;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const LevelOverflow& e) {
            o = skip("level overflow: needs level " + std::to_string(e.required) + ", window " + std::to_string(e.bound));
        } catch (const std::exception& e) {
            o = fail(std::string("exception: ") + e.what());
        }
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        c.status = o.status;
        c.witness = std::move(o.witness);
        c.detail = std::move(o.detail);
        r_.checks.push_back(std::move(c));
    }
    void skip_all(const std::vector<std::string>& names, const std::string& why) {
        for (const auto& n : names) run(n, [&] { return skip(why); });
    }

private:
    Report& r_;
    std::string suite_, anchor_;
};

std::string pbw_text(const Pbw& m) {
    return "f^" + std::to_string(m.f) + " k^" + std::to_string(m.k) + " e^" + std::to_string(m.e);
}
std::string index_text(const CoeffIndex& t) {
    return "t" + std::to_string(t.n) + "(" + std::to_string(t.i) + "," + std::to_string(t.j) + ")";
}

std::vector<CoeffIndex> basis_up_to(int level) {
    std::vector<CoeffIndex> out;
    for (int n = 0; n <= level; ++n)
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) out.push_back({n, i, j});
    return out;
}

void suite_hopf(Context& ctx, Report& rep) {
    Runner r(rep, "hopf", "Hopf algebra structure of U_q(g) and of its dual coefficient algebra T_q");
    const auto monos = pbw_monomials(4);
    auto over_monomials = [&](const std::function<bool(const UEAElement&)>& ok) {
        for (const auto& m : monos)
            if (!ok(UEAElement::monomial(m))) return fail("fails on " + pbw_text(m));
        return pass({{"monomials", monos.size()}, {"max_degree", 4}});
    };
    r.run("uea.coassociativity", [&] {
        return over_monomials([](const UEAElement& x) {
            const TensorUEA d = coproduct(x);
            return coproduct_left(d) == coproduct_right(d);
        });
    });
    r.run("uea.counit", [&] {
        return over_monomials([](const UEAElement& x) {
            UEAElement left, right;
            for (const auto& [a, b] : coproduct(x).pairs()) {
                left += b * counit(a);
                right += a * counit(b);
            }
            return left == x && right == x;
        });
    });
    r.run("uea.antipode", [&] {
        return over_monomials([](const UEAElement& x) {
            const TensorUEA d = coproduct(x);
            const UEAElement e(counit(x));
            return map_legs(d, antipode, nullptr).multiply_legs() == e &&
                   map_legs(d, nullptr, antipode).multiply_legs() == e && antipode(antipode_inv(x)) == x;
        });
    });
    r.run("uea.star_involution", [&] {
        return over_monomials([](const UEAElement& x) {
            return star(star(x)) == x && coproduct(star(x)) == map_legs(coproduct(x), star, star);
        });
    });

    const int lh = std::min(2, ctx.cfg.level);
    const auto basis = basis_up_to(lh);
    auto over_basis = [&](const std::function<bool(const CoeffElement&)>& ok) {
        for (const auto& t : basis)
            if (!ok(CoeffElement::t(t.n, t.i, t.j))) return fail("fails on " + index_text(t));
        return pass({{"basis", basis.size()}, {"max_level", lh}});
    };
    r.run("coeff.coassociativity", [&] {
        return over_basis([](const CoeffElement& f) {
            using Key = std::tuple<CoeffIndex, CoeffIndex, CoeffIndex>;
            std::map<Key, Scalar> lhs, rhs;
            for (const auto& [a, b] : coproduct(f)) {
                for (const auto& [a1, a2] : coproduct(a))
                    for (const auto& [i1, c1] : a1.terms())
                        for (const auto& [i2, c2] : a2.terms())
                            for (const auto& [ib, cb] : b.terms()) lhs[{i1, i2, ib}] += c1 * c2 * cb;
                for (const auto& [b1, b2] : coproduct(b))
                    for (const auto& [ia, ca] : a.terms())
                        for (const auto& [i1, c1] : b1.terms())
                            for (const auto& [i2, c2] : b2.terms()) rhs[{ia, i1, i2}] += ca * c1 * c2;
            }
            std::erase_if(lhs, [](const auto& kv) { return kv.second.is_zero(); });
            std::erase_if(rhs, [](const auto& kv) { return kv.second.is_zero(); });
            return lhs == rhs;
        });
    });
    r.run("coeff.counit", [&] {
        return over_basis([](const CoeffElement& f) {
            CoeffElement left, right;
            for (const auto& [a, b] : coproduct(f)) {
                left += b * counit(a);
                right += a * counit(b);
            }
            return left == f && right == f;
        });
    });
    r.run("coeff.antipode", [&] {
        return over_basis([](const CoeffElement& f) {
            CoeffElement sl, sr;
            for (const auto& [a, b] : coproduct(f)) {
                sl += multiply(antipode(a), b);
                sr += multiply(a, antipode(b));
            }
            const CoeffElement e(counit(f));
            return sl == e && sr == e;
        });
    });
    r.run("coeff.star_involution", [&] {
        return over_basis([](const CoeffElement& f) { return star(star(f)) == f; });
    });
}

void suite_pairing(Context& ctx, Report& rep) {
    Runner r(rep, "pairing", "nondegenerate dual pairing between T_q and U_q");
    for (int n = 0; n <= ctx.cfg.level; ++n)
        r.run("pairing.full_column_rank.level_" + std::to_string(n), [&] {
            const PairingTable& t = PairingTable::get(n);
            std::size_t rank_sum = 0;
            for (const auto& b : t.blocks()) rank_sum += b.rank;
            return expect(t.full_column_rank(), "rank deficit at level " + std::to_string(n),
                          {{"basis", t.basis().size()}, {"monomials", t.monomials().size()}, {"rank", rank_sum}});
        });
}

void suite_actions(Context& ctx, Report& rep) {
    Runner r(rep, "actions", "commuting left actions of U_q on T_q by right and left translation");
    const int la = std::min(2, ctx.cfg.level);
    Rng rng = suite_rng(ctx.cfg.seed, "actions");
    struct Triple {
        UEAElement x, y;
        CoeffElement f, g;
    };
    std::vector<Triple> samples;
    for (int s = 0; s < ctx.cfg.action_samples; ++s) {
        Triple t{random_uea(rng, 2), random_uea(rng, 2), random_coeff(rng, la), random_coeff(rng, std::min(1, la))};
        samples.push_back(std::move(t));
    }
    auto over = [&](const std::function<bool(const Triple&)>& ok) {
        for (std::size_t i = 0; i < samples.size(); ++i)
            if (!ok(samples[i])) return fail("fails on sample " + std::to_string(i));
        return pass({{"samples", samples.size()}, {"max_level", la}});
    };
    r.run("actions.commute", [&] {
        return over([](const Triple& t) { return circle(t.x, dot(t.y, t.f)) == dot(t.y, circle(t.x, t.f)); });
    });
    r.run("actions.circle_is_left_action", [&] {
        return over([](const Triple& t) {
            return circle(t.x, circle(t.y, t.f)) == circle(t.x * t.y, t.f) && circle(UEAElement::one(), t.f) == t.f;
        });
    });
    r.run("actions.dot_is_left_action", [&] {
        return over([](const Triple& t) {
            return dot(t.x, dot(t.y, t.f)) == dot(t.x * t.y, t.f) && dot(UEAElement::one(), t.f) == t.f;
        });
    });
    r.run("actions.circle_module_algebra", [&] {
        return over([](const Triple& t) {
            CoeffElement rhs;
            for (const auto& [a, b] : coproduct(t.x).pairs()) rhs += multiply(circle(a, t.f), circle(b, t.g));
            return circle(t.x, multiply(t.f, t.g)) == rhs;
        });
    });
}

void suite_haar(Context& ctx, Report& rep) {
    Runner r(rep, "haar", "Haar functional: normalization, invariance and positive definiteness");
    const int lh = std::min(2, ctx.cfg.level);
    r.run("haar.unit", [&] { return expect(haar(CoeffElement::unit()) == Scalar(1), "haar(1) != 1"); });
    r.run("haar.invariance", [&] {
        for (const auto& t : basis_up_to(lh)) {
            const CoeffElement f = CoeffElement::t(t.n, t.i, t.j);
            CoeffElement left, right;
            for (const auto& [a, b] : coproduct(f)) {
                left += a * haar(b);
                right += b * haar(a);
            }
            if (!(left == CoeffElement(haar(f))) || !(right == CoeffElement(haar(f))))
                return fail("fails on " + index_text(t));
        }
        return pass({{"max_level", lh}});
    });
    r.run("haar.positivity", [&] {
        Rng rng = suite_rng(ctx.cfg.seed, "haar");
        ojson minima = ojson::array();
        std::vector<mpq_class> lowest(ctx.cfg.samples.size());
        for (int s = 0; s < ctx.cfg.haar_samples; ++s) {
            const CoeffElement f = random_coeff(rng, lh);
            const Scalar n = haar_norm_sq(f);
            for (std::size_t i = 0; i < ctx.cfg.samples.size(); ++i) {
                const mpq_class v = n.eval_at(ctx.cfg.samples[i]);
                if (v <= 0) return fail("non-positive at u = " + ctx.cfg.samples[i].get_str() + " for " + f.to_string());
                if (s == 0 || v < lowest[i]) lowest[i] = v;
            }
        }
        for (std::size_t i = 0; i < lowest.size(); ++i)
            minima.push_back({{"u", ctx.cfg.samples[i].get_str()}, {"min", lowest[i].get_str()}});
        return pass({{"elements", ctx.cfg.haar_samples}, {"minimum", minima}});
    });
}

std::vector<std::vector<int>> bundle_cases(const RunConfig& cfg) {
    std::vector<std::vector<int>> out{{1}, {1, -1}};
    if (std::find(out.begin(), out.end(), cfg.weights) == out.end()) out.push_back(cfg.weights);
    return out;
}

std::string weights_text(const std::vector<int>& w) { return "V={" + list_text(w) + "}"; }

void suite_idempotent(Context& ctx, Report& rep) {
    Runner r(rep, "idempotent", "projectivity of the section module: e = im o wp is an idempotent");
    const auto cases = bundle_cases(ctx.cfg);
    std::vector<std::string> names;
    for (const auto& w : cases) {
        names.push_back("idempotent.square." + weights_text(w));
        names.push_back("idempotent.rank." + weights_text(w));
    }
    if (!ctx.cfg.theta.empty()) return r.skip_all(names, "bundles are implemented for theta = {} only");
    const int level = std::min(3, ctx.cfg.level);
    for (const auto& w : cases) {
        std::shared_ptr<BundleIdempotent> res;
        auto get = [&] {
            if (!res) res = std::make_shared<BundleIdempotent>(idempotent(LModule::from_weights(w), level));
            return res;
        };
        r.run("idempotent.square." + weights_text(w), [&] {
            const auto e = get();
            return expect(e->matrix_idempotent && e->window_idempotent, "e^2 != e",
                          {{"level", level}, {"matrix_idempotent", e->matrix_idempotent},
                           {"window_idempotent", e->window_idempotent}});
        });
        r.run("idempotent.rank." + weights_text(w), [&] {
            const auto e = get();
            return expect(e->rank == e->sections_dim, "rank(e) != dim of sections",
                          {{"level", level}, {"matched_level", e->matched_level}, {"rank", e->rank},
                           {"sections_dim", e->sections_dim}});
        });
    }
}

Matrix flatten_vectors(const std::vector<std::vector<CoeffElement>>& vs) {
    std::map<std::pair<std::size_t, CoeffIndex>, std::size_t> rows;
    for (const auto& v : vs)
        for (std::size_t s = 0; s < v.size(); ++s)
            for (const auto& [t, c] : v[s].terms()) rows.emplace(std::make_pair(s, t), rows.size());
    Matrix m(rows.size(), vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t s = 0; s < vs[i].size(); ++s)
            for (const auto& [t, c] : vs[i][s].terms()) m(rows.at({s, t}), i) = c;
    return m;
}

void suite_sections(Context& ctx, Report& rep) {
    Runner r(rep, "sections", "the module maps wp and im between sections and W (x) E_q");
    const std::vector<std::string> names{"sections.wp_im_identity", "sections.im_injective", "sections.wp_surjective",
                                         "sections.right_linear"};
    if (!ctx.cfg.theta.empty()) return r.skip_all(names, "bundles are implemented for theta = {} only");
    const int level = std::min(3, ctx.cfg.level);
    const LModule v = LModule::from_weights(ctx.cfg.weights);
    const Bundle& b = ctx.line();
    const auto basis = sections_basis(v, level);
    r.run("sections.wp_im_identity", [&] {
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (b.wp(b.im(basis[i])) != basis[i]) return fail("wp(im(s)) != s for basis element " + std::to_string(i));
        return pass({{"level", level}, {"basis", basis.size()}});
    });
    r.run("sections.im_injective", [&] {
        std::vector<std::vector<CoeffElement>> images;
        for (const auto& s : basis) images.push_back(b.im(s));
        const std::size_t rk = basis.empty() ? 0 : rank(flatten_vectors(images));
        return expect(rk == basis.size(), "im has a kernel on the basis", {{"rank", rk}, {"basis", basis.size()}});
    });
    r.run("sections.wp_surjective", [&] {
        const auto gens = b.generators();
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const auto a = generation_coefficients(b, basis[i], level + b.w_level());
            Section sum(v.dim());
            for (std::size_t al = 0; al < gens.size(); ++al)
                if (!a[al].is_zero()) sum = add(sum, right_multiply(gens[al], a[al]));
            if (sum != basis[i]) return fail("generation fails for basis element " + std::to_string(i));
        }
        return pass({{"basis", basis.size()}, {"coefficient_level", level + b.w_level()}});
    });
    r.run("sections.right_linear", [&] {
        if (ctx.cfg.level < 2) return skip("window below 2 has no nonconstant invariants");
        Rng rng = suite_rng(ctx.cfg.seed, "sections");
        const auto inv = invariants(ThetaChoice{}, 2).elements;
        int checked = 0;
        for (int s = 0; s < 10 && !basis.empty(); ++s) {
            const Section& sec = basis[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(basis.size()) - 1))];
            const CoeffElement a = random_combination(rng, inv);
            if (b.im(right_multiply(sec, a)) != right_multiply(b.im(sec), a)) return fail("im not right linear");
            WVector x(b.dim_w());
            for (auto& c : x) c = random_combination(rng, inv);
            if (b.wp(right_multiply(x, a)) != right_multiply(b.wp(x), a)) return fail("wp not right linear");
            ++checked;
        }
        return pass({{"samples", checked}});
    });
}

ojson eigen_json(const BraidingSplit& s) {
    ojson out = ojson::array();
    for (const auto& e : s.eigenspaces)
        out.push_back({{"value", e.value.to_string()},
                       {"multiplicity", e.vectors.size()},
                       {"class", e.value.eval_at(mpq_class(1)) > 0 ? "+" : "-"}});
    return out;
}

void suite_calculus(Context& ctx, Report& rep) {
    Runner r(rep, "calculus", "bicovariant first order calculus, braiding split and higher forms");
    const Calculus& c = ctx.calculus();
    const CalculusData& data = c.data();
    const BraidingSplit& s = c.split();
    const std::size_t K = c.K();
    r.run("calculus.axioms", [&] {
        const AxiomReport a = check_axioms(data);
        return expect(a.all(), a.failure,
                      {{"K", K}, {"counit_x", a.counit_x}, {"counit_f", a.counit_f}, {"coproduct_x", a.coproduct_x},
                       {"coproduct_f", a.coproduct_f}});
    });
    r.run("calculus.nondegenerate", [&] { return expect(data.nondegenerate, "tangent functionals are dependent"); });
    r.run("braiding.classical_limit", [&] {
        return expect(s.sigma.eval_at(1) == flip(K, K).eval_at(1), "sigma at u = 1 is not the flip");
    });
    r.run("braiding.split", [&] {
        const bool ok = s.plus - s.minus == s.sigma && (s.plus * s.minus).is_zero() && (s.minus * s.plus).is_zero();
        return expect(ok, "sigma_+ sigma_- != 0 or sigma != sigma_+ - sigma_-",
                      {{"eigenvalues", eigen_json(s)}, {"kernel_sigma_minus", s.kernel_minus.size()}});
    });
    r.run("braiding.module_map", [&] {
        const Module gg = tensor(data.gamma, data.gamma);
        for (const Matrix* m : {&s.plus, &s.minus})
            if (!(*m * gg.e() == gg.e() * *m) || !(*m * gg.f() == gg.f() * *m) || !(*m * gg.k() == gg.k() * *m))
                return fail("sigma_+- does not commute with the coaction module");
        return pass();
    });
    r.run("braiding.r_matrix_comparison", [&] {
        const Matrix pr = r_braiding_matrix(data);
        ojson d;
        try {
            d["eigenvalues"] = eigen_json(split_braiding(pr));
        } catch (const SplitError& e) {
            d["split"] = e.what();
        }
        return expect(pr.eval_at(1) == flip(K, K).eval_at(1), "P R at u = 1 is not the flip", d);
    });
    r.run("omega.vanishing", [&] {
        std::vector<std::size_t> dims;
        for (int n = 0; n <= static_cast<int>(K) + 1; ++n) dims.push_back(c.omega_dim(n));
        return expect(dims.back() == 0 && dims[0] == 1 && dims[1] == K, "Omega^(K+1) != 0", {{"dims", dims}});
    });

    Rng rng = suite_rng(ctx.cfg.seed, "calculus");
    const int n_samples = ctx.cfg.calculus_samples;
    r.run("d0.leibniz", [&] {
        for (int i = 0; i < n_samples; ++i) {
            const CoeffElement a = random_coeff(rng, 1), b = random_coeff(rng, 1);
            if (c.d0(a * b) != c.add(c.right_mult(c.d0(a), b), c.left_mult(a, c.d0(b))))
                return fail("d(ab) != (da)b + a(db) on sample " + std::to_string(i));
            if (c.d(c.function(a)) != c.d0(a)) return fail("d differs from d0 in degree 0");
        }
        return pass({{"samples", n_samples}});
    });
    r.run("d.squared", [&] {
        for (int i = 0; i < n_samples; ++i) {
            const FormElement w = random_form(rng, c, i % 3, 1);
            if (!c.d(c.d(w)).is_zero()) return fail("d^2 != 0 on a degree " + std::to_string(i % 3) + " sample");
        }
        return pass({{"samples", n_samples}});
    });
    r.run("d.graded_leibniz", [&] {
        for (int i = 0; i < n_samples; ++i) {
            const int n = i % 2, m = (i / 2) % 2;
            const FormElement w = random_form(rng, c, n, 1), v = random_form(rng, c, m, 1);
            const FormElement tail = c.wedge(w, c.d(v));
            const FormElement rhs = c.add(c.wedge(c.d(w), v), n == 0 ? tail : c.scale(tail, Scalar(-1)));
            if (c.d(c.wedge(w, v)) != rhs) return fail("graded Leibniz fails on sample " + std::to_string(i));
        }
        return pass({{"samples", n_samples}});
    });
    const std::vector<std::pair<std::string, UEAElement>> gens{
        {"e", UEAElement::e()}, {"f", UEAElement::f()}, {"k", UEAElement::k()}, {"k^-1", UEAElement::k(-1)}};
    r.run("covariance.dot_commutes_with_d", "x.(d w) = d(x.w) for all generators x", [&] {
        for (int i = 0; i < n_samples; ++i) {
            const FormElement w = random_form(rng, c, i % 2, 1);
            for (const auto& [name, x] : gens)
                if (c.dot(x, c.d(w)) != c.d(c.dot(x, w))) return fail("fails for " + name);
        }
        return pass({{"samples", n_samples}, {"generators", 4}});
    });
    r.run("covariance.circle_commutes_with_d", "p o (d w) = d(p o w) for all generators p", [&] {
        for (int i = 0; i < n_samples; ++i) {
            const FormElement w = random_form(rng, c, i % 2, 1);
            for (const auto& [name, x] : gens)
                if (c.circle(x, c.d(w)) != c.d(c.circle(x, w))) return fail("fails for " + name);
        }
        return pass({{"samples", n_samples}, {"generators", 4}});
    });
}

void suite_restricted(Context& ctx, Report& rep) {
    Runner r(rep, "restricted", "the calculus restricted to the quantum homogeneous space E_q");
    const std::vector<std::string> names{"restricted.degree0_is_invariants", "restricted.d_closure.degree_0",
                                         "restricted.d_closure.degree_1", "restricted.epsilon_triviality"};
    const ThetaChoice theta = ctx.cfg.theta_choice();
    const int window = std::min(3, ctx.cfg.level);
    std::unique_ptr<RestrictedCalculus> res;
    try {
        res = std::make_unique<RestrictedCalculus>(restrict(ctx.calculus(), theta, window, 2));
    } catch (const LevelOverflow& e) {
        return r.skip_all(names, "level overflow: needs level " + std::to_string(e.required));
    }
    const ojson dims = {{"window", window}, {"theta", theta_text(theta)}, {"dims", res->dims}};
    if (res->dims.size() < 2 || res->dims[1] == 0)
        return r.skip_all(names, "restricted one-forms vanish at window " + std::to_string(window));
    r.run("restricted.degree0_is_invariants", [&] {
        return expect(res->dims[0] == invariants(theta, window).elements.size(), "degree 0 differs from E_q", dims);
    });
    r.run("restricted.d_closure.degree_0", [&] { return expect(res->closed[0], "d(E_q) not in Omega^1(E_q)", dims); });
    r.run("restricted.d_closure.degree_1",
          [&] { return expect(res->closed[1], "d(Omega^1(E_q)) not in Omega^2(E_q)", dims); });
    r.run("restricted.epsilon_triviality", "p o w = eps(p) w for p in U_l", [&] {
        const Calculus& c = ctx.calculus();
        std::size_t checked = 0;
        for (const auto& p : levi_generators(theta))
            for (const auto& span : res->spans)
                for (const auto& w : span) {
                    if (circle_on_restricted(c, *res, p, w) != c.scale(w, counit(p)))
                        return fail("p o w != eps(p) w for p = " + p.to_string());
                    ++checked;
                }
        return pass({{"checked", checked}});
    });
}

void suite_connection(Context& ctx, Report& rep) {
    Runner r(rep, "connection", "connections on the section module form an affine space over right-linear maps");
    const std::vector<std::string> names{"partial.chain_vs_explicit", "partial.leibniz", "nabla0.realizations",
                                         "nabla0.connection_law", "perturbed.connection_law",
                                         "perturbed.difference_linear", "perturbed.rejects_nonlinear"};
    if (!ctx.cfg.theta.empty()) return r.skip_all(names, "bundles are implemented for theta = {} only");
    if (ctx.cfg.level < 2) return r.skip_all(names, "window below 2 has no nonconstant invariants");
    const Calculus& c = ctx.calculus();
    const Bundle& b = ctx.line();
    const auto inv = invariants(ThetaChoice{}, 2).elements;
    const auto gens = b.generators();
    const int K = static_cast<int>(c.K());
    Rng rng = suite_rng(ctx.cfg.seed, "connection");
    auto zeta_times = [&](std::size_t alpha, const FormElement& w) {
        WForm out;
        for (const auto& x : embed_section(b, c, gens[alpha])) out.push_back(c.left_mult(x.coords[0], w));
        return out;
    };
    auto random_psi = [&](int degree) {
        const std::size_t alpha = static_cast<std::size_t>(pick(rng, 0, static_cast<int>(gens.size()) - 1));
        const CoeffElement a = random_combination(rng, inv);
        const FormElement w = degree == 0 ? c.function(a) : c.d0(a);
        return zeta_times(alpha, w);
    };
    auto law = [&](const ConnectionMap& conn, const WForm& psi, const FormElement& w) {
        const int n = psi[0].degree;
        const WForm lhs = conn.apply(b, c, wform_right(c, psi, w));
        const WForm tail = wform_right(c, psi, c.d(w));
        const WForm first = wform_right(c, conn.apply(b, c, psi), w);
        return lhs == (n % 2 == 0 ? wform_add(first, tail) : wform_sub(first, tail));
    };

    r.run("partial.chain_vs_explicit", [&] {
        for (int s = 0; s < 3; ++s) {
            std::vector<CoeffElement> a(b.dim_w());
            for (auto& x : a) x = random_combination(rng, inv);
            Section sec(b.fiber().dim());
            for (std::size_t i = 0; i < a.size(); ++i) sec = add(sec, b.wp(i, a[i]));
            if (partial(b, c, sec) != partial_explicit(b, c, a)) return fail("chain and explicit formula differ");
        }
        return pass({{"samples", 3}});
    });
    r.run("partial.leibniz", [&] {
        for (std::size_t al = 0; al < gens.size(); ++al) {
            const CoeffElement a = random_combination(rng, inv);
            const WForm lhs = partial(b, c, right_multiply(gens[al], a));
            const WForm pz = partial(b, c, gens[al]);
            WForm rhs;
            for (const auto& f : pz) rhs.push_back(c.right_mult(f, a));
            rhs = wform_add(rhs, zeta_times(al, c.d0(a)));
            if (lhs != rhs) return fail("partial(zeta a) != partial(zeta) a + zeta da");
        }
        return pass({{"generators", gens.size()}});
    });
    r.run("nabla0.realizations", [&] {
        for (std::size_t al = 0; al < gens.size(); ++al) {
            const WForm z = embed_section(b, c, gens[al]);
            if (nabla0(b, c, z) != nabla0_chain(b, c, z)) return fail("realizations differ on a generator");
        }
        for (int s = 0; s < 4; ++s) {
            const WForm psi = random_psi(s % 2);
            const WForm g = nabla0(b, c, psi);
            if (g[0].degree != psi[0].degree + 1) return fail("degree not raised by one");
            if (g != nabla0_chain(b, c, psi)) return fail("realizations differ on a sample");
        }
        return pass({{"generators", gens.size()}, {"samples", 4}});
    });
    r.run("nabla0.connection_law", [&] {
        const ConnectionMap base = base_connection();
        for (int s = 0; s < ctx.cfg.connection_samples; ++s) {
            const WForm psi = random_psi(s % 2);
            const FormElement w = c.d0(random_combination(rng, inv));
            if (!law(base, psi, w)) return fail("connection law fails on sample " + std::to_string(s));
        }
        return pass({{"samples", ctx.cfg.connection_samples}});
    });
    std::vector<ConnectionMap> built;
    r.run("perturbed.connection_law", [&] {
        for (int i = 0; i < ctx.cfg.perturbations; ++i) {
            std::vector<std::vector<FormElement>> m(b.dim_w(), std::vector<FormElement>(b.dim_w(), c.zero(1)));
            // Constant left-invariant one-forms with seeded scalar weights.
            for (auto& row : m)
                for (auto& x : row)
                    if (rng() % 2 == 0)
                        x = c.scale(c.basis_form(1, static_cast<std::size_t>(pick(rng, 0, static_cast<int>(K) - 1))),
                                    small_scalar(rng));
            built.push_back(make_connection(b, c, form_matrix_map(b, c, m)));
            const WForm psi = random_psi(i % 2);
            const FormElement w = c.d0(random_combination(rng, inv));
            if (!law(built.back(), psi, w)) return fail("connection law fails for perturbation " + std::to_string(i));
        }
        return pass({{"perturbations", ctx.cfg.perturbations}});
    });
    r.run("perturbed.difference_linear", [&] {
        if (built.empty()) return skip("no perturbations were constructed");
        const ConnectionMap base = base_connection();
        for (std::size_t i = 0; i < built.size(); ++i) {
            const ConnectionMap& other = i + 1 < built.size() ? built[i + 1] : base;
            if (!difference_is_linear(b, c, built[i], other)) return fail("difference is not right linear");
        }
        return pass({{"pairs", built.size()}});
    });
    r.run("perturbed.rejects_nonlinear", [&] {
        try {
            make_connection(b, c, [&](const Section& s) { return partial(b, c, s); });
        } catch (const NotLinear& e) {
            return pass({{"certificate", e.what()}});
        }
        return fail("partial was accepted as right linear");
    });
}

void suite_curvature(Context& ctx, Report& rep) {
    Runner r(rep, "curvature", "curvature of a connection is right linear and satisfies the Bianchi identity");
    const std::vector<std::string> names{"curvature.right_linear", "curvature.bianchi", "curvature.bianchi_sections",
                                         "curvature.trivial_bundle"};
    if (!ctx.cfg.theta.empty()) return r.skip_all(names, "bundles are implemented for theta = {} only");
    if (ctx.cfg.level < 2) return r.skip_all(names, "window below 2 has no nonconstant invariants");
    const Calculus& c = ctx.calculus();
    const Bundle& b = ctx.line();
    const ConnectionMap base = base_connection();
    std::unique_ptr<CurvatureMap> f;
    auto get = [&]() -> const CurvatureMap& {
        if (!f) f = std::make_unique<CurvatureMap>(curvature(b, c, base));
        return *f;
    };
    r.run("curvature.right_linear", [&] {
        const auto gens = b.generators();
        const auto inv = invariants(ThetaChoice{}, 2).elements;
        std::size_t checked = 0;
        for (std::size_t al = 0; al < gens.size(); ++al)
            for (const auto& g : inv) {
                const WForm z = embed_section(b, c, right_multiply(gens[al], g));
                WForm rhs;
                for (const auto& x : get().columns[al]) rhs.push_back(c.right_mult(x, g));
                if (base.apply(b, c, base.apply(b, c, z)) != rhs) return fail("F(zeta a) != F(zeta) a");
                ++checked;
            }
        return pass({{"pairs", checked}, {"curvature_zero", get().is_zero()}});
    });
    r.run("curvature.bianchi", [&] {
        return expect(bianchi(b, c, base, get()), "nabla F != F nabla on a generator", {{"generators", b.dim_w()}});
    });
    r.run("curvature.bianchi_sections", [&] {
        // Smallest window holding the generators, then the next level of the same parity.
        const int window = std::min(ctx.cfg.level, b.w_level() + 2);
        const auto basis = sections_basis(b.fiber(), window);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const WForm z = embed_section(b, c, basis[i]);
            if (base.apply(b, c, get().extend(c, z)) != get().extend(c, base.apply(b, c, z)))
                return fail("nabla F != F nabla on sections basis element " + std::to_string(i));
        }
        return pass({{"window", window}, {"basis", basis.size()}});
    });
    r.run("curvature.trivial_bundle", [&] {
        const Bundle trivial(LModule::from_weights({0}));
        return expect(curvature(trivial, c, base).is_zero(), "F != 0 for the trivial bundle");
    });
}

void suite_borel_weil(Context& ctx, Report& rep) {
    Runner r(rep, "borel_weil", "holomorphic sections of a line bundle realize an irreducible module");
    const std::vector<std::string> names{"borel_weil.dimension", "borel_weil.irreducible"};
    if (!ctx.cfg.theta.empty()) return r.skip_all(names, "bundles are implemented for theta = {} only");
    const auto basis = holomorphic_sections(LModule::from_weights({-1}), 1);
    const auto other = holomorphic_sections(LModule::from_weights({1}), 1);
    r.run("borel_weil.dimension", [&] {
        return expect(basis.size() == 2 && irrep(1).dim() == 2, "dim of holomorphic sections != dim W(1)",
                      {{"weight", -1}, {"dim", basis.size()}, {"opposite_weight_dim", other.size()}});
    });
    r.run("borel_weil.irreducible", [&] {
        if (basis.empty()) return fail("no holomorphic sections");
        return expect(is_irreducible(dot_action(basis)), "the dot action has a proper invariant subspace");
    });
}

using SuiteFn = void (*)(Context&, Report&);
const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r{
        {"hopf", suite_hopf},           {"pairing", suite_pairing},       {"actions", suite_actions},
        {"haar", suite_haar},           {"idempotent", suite_idempotent}, {"sections", suite_sections},
        {"calculus", suite_calculus},   {"restricted", suite_restricted}, {"connection", suite_connection},
        {"curvature", suite_curvature}, {"borel_weil", suite_borel_weil}};
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [n, f] : registry()) out.push_back(n);
        return out;
    }();
    return names;
}

Report verify(const RunConfig& config) {
    config.validate();
    Report rep;
    rep.config = config;
    Context ctx{config, nullptr, nullptr};
    for (const auto& [name, fn] : registry())
        if (config.suite == "all" || config.suite == name) fn(ctx, rep);
    return rep;
}

// ---------------------------------------------------------------------------
// Tables

ojson dims_table(const RunConfig& config) {
    config.validate();
    const Calculus c(from_rep(irrep(config.calculus)));
    const std::size_t K = c.K();
    ojson j;
    j["command"] = "dims";
    j["config"] = config.to_json();
    ojson omega = ojson::array();
    for (int n = 0; n <= static_cast<int>(K) + 1; ++n)
        omega.push_back({{"degree", n}, {"dim", c.omega_dim(n)}, {"anchor", "higher forms vanish above degree K"}});
    j["K"] = K;
    j["omega"] = std::move(omega);
    j["braiding"] = {{"anchor", "braiding split by sign at u = 1"},
                     {"eigenvalues", eigen_json(c.split())},
                     {"kernel_sigma_minus", c.split().kernel_minus.size()}};
    bool closed = true;
    ojson restricted = ojson::array();
    for (int w = 0; w <= config.level; ++w) {
        const RestrictedCalculus r = restrict(c, config.theta_choice(), w, 2);
        for (bool b : r.closed) closed = closed && b;
        restricted.push_back({{"window", w}, {"dims", r.dims}, {"closed", r.closed},
                              {"anchor", "restricted calculus on the quantum homogeneous space"}});
    }
    j["restricted"] = std::move(restricted);
    const bool vanishing = c.omega_dim(static_cast<int>(K) + 1) == 0;
    j["vanishing"] = vanishing;
    j["pass"] = vanishing && closed;
    return j;
}

namespace {
void require_empty_theta(const RunConfig& config) {
    if (!config.theta.empty()) throw ConfigError("bundle computations need theta = {}");
}
}  // namespace

ojson idempotent_dump(const RunConfig& config) {
    config.validate();
    require_empty_theta(config);
    const LModule v = LModule::from_weights(config.weights);
    const BundleIdempotent e = idempotent(v, config.level);
    ojson j;
    j["command"] = "idempotent";
    j["config"] = config.to_json();
    j["anchor"] = "projectivity of the section module: e = im o wp is an idempotent";
    j["level"] = e.level;
    j["matched_level"] = e.matched_level;
    ojson m = ojson::array();
    for (const auto& row : e.matrix) {
        ojson r = ojson::array();
        for (const auto& x : row) r.push_back(coeff_to_json(x));
        m.push_back(std::move(r));
    }
    j["matrix"] = std::move(m);
    j["e_squared_equals_e"] = e.matrix_idempotent && e.window_idempotent;
    j["rank"] = e.rank;
    j["sections_dim"] = e.sections_dim;
    j["pass"] = e.matrix_idempotent && e.window_idempotent && e.rank == e.sections_dim;
    return j;
}

ojson connection_dump(const RunConfig& config) {
    config.validate();
    require_empty_theta(config);
    const Calculus c(from_rep(irrep(config.calculus)));
    const Bundle b(LModule::from_weights(config.weights));
    const ConnectionMap base = base_connection();
    const CurvatureMap f = curvature(b, c, base);
    auto wjson = [&](const WForm& x) {
        ojson out = ojson::array();
        for (const auto& w : x) out.push_back(form_to_json(c, w));
        return out;
    };
    ojson gens = ojson::array();
    bool agree = true;
    const auto g = b.generators();
    for (std::size_t a = 0; a < g.size(); ++a) {
        const WForm z = embed_section(b, c, g[a]);
        const WForm p = partial(b, c, g[a]);
        const WForm n = nabla0(b, c, z);
        agree = agree && n == nabla0_chain(b, c, z);
        gens.push_back({{"generator", a},
                        {"partial", wjson(p)},
                        {"nabla0", wjson(n)},
                        {"curvature", wjson(f.columns[a])},
                        {"anchor", "partial, the connection nabla0 and its curvature on a generator"}});
    }
    const bool bi = bianchi(b, c, base, f);
    ojson j;
    j["command"] = "connection";
    j["config"] = config.to_json();
    j["generators"] = std::move(gens);
    j["realizations_agree"] = agree;
    j["bianchi"] = bi;
    j["curvature_zero"] = f.is_zero();
    j["pass"] = agree && bi;
    return j;
}

ojson haar_table(const RunConfig& config) {
    config.validate();
    Rng rng = suite_rng(config.seed, "haar");
    const int lh = std::min(2, config.level);
    ojson rows = ojson::array();
    bool positive = true;
    for (int s = 0; s < config.haar_samples; ++s) {
        const CoeffElement f = random_coeff(rng, lh);
        const Scalar n = haar_norm_sq(f);
        ojson values = ojson::array();
        for (const auto& u : config.samples) {
            const mpq_class v = n.eval_at(u);
            positive = positive && v > 0;
            values.push_back({{"u", u.get_str()}, {"value", v.get_str()}});
        }
        rows.push_back({{"element", coeff_to_json(f)},
                        {"norm_sq", n.to_string()},
                        {"values", std::move(values)},
                        {"anchor", "positive definiteness of the Haar functional"}});
    }
    ojson j;
    j["command"] = "haar";
    j["config"] = config.to_json();
    j["haar_unit"] = haar(CoeffElement::unit()).to_string();
    j["rows"] = std::move(rows);
    j["positive"] = positive;
    j["pass"] = positive && haar(CoeffElement::unit()) == Scalar(1);
    return j;
}

}  // namespace qb

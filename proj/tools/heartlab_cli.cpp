#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "heartlab/fan_svg.hpp"
#include "heartlab/json_io.hpp"

using namespace heartlab;
namespace fs = std::filesystem;

namespace {

enum Exit { kOk = 0, kCounterexample = 1, kUsage = 2 };

struct Globals {
    std::string type = "A2";
    std::uint64_t seed = 0;
    std::string out;
    std::string format = "json";
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const Globals& g, const std::string& text)
{
    if (g.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(g.out);
    if (!f) throw UsageError("cannot write " + g.out);
    f << text;
}

int emit_json(const Globals& g, const json& j, bool ok)
{
    emit(g, j.dump(2));
    return ok ? kOk : kCounterexample;
}

// Comma-separated rationals; e entries are lambda coordinates, e+1 are omega coordinates.
Coweight parse_coweight(const CartanData& c, const std::string& text, const std::string& basis)
{
    VectorQ v = parse_rational_list(text);
    std::string b = basis;
    if (b.empty()) b = v.size() == c.size() ? "omega" : "lambda";
    if (b == "omega") {
        if (v.size() != c.size()) throw UsageError("omega coordinates need " + std::to_string(c.size()) + " entries");
        return v;
    }
    if (b != "lambda") throw UsageError("unknown basis '" + b + "'");
    if (v.size() != c.rank()) throw UsageError("lambda coordinates need " + std::to_string(c.rank()) + " entries");
    return embed(c, FiniteCoweight(v));
}

FiniteCoweight parse_finite(const CartanData& c, const std::string& text)
{
    VectorQ v = parse_rational_list(text);
    if (v.size() != c.rank()) throw UsageError("lambda coordinates need " + std::to_string(c.rank()) + " entries");
    return FiniteCoweight(v);
}

std::vector<int> parse_J(const CartanData& c, const std::string& text)
{
    std::vector<int> J;
    if (text.empty() || text == "none") return J;
    for (int j : parse_int_list(text)) {
        if (j < 1 || j > c.rank()) throw UsageError("J must be a subset of the finite nodes 1.." + std::to_string(c.rank()));
        J.push_back(j);
    }
    std::sort(J.begin(), J.end());
    J.erase(std::unique(J.begin(), J.end()), J.end());
    return J;
}

std::pair<Integer, Integer> parse_range(const std::string& text)
{
    auto pos = text.find("..");
    try {
        if (pos == std::string::npos) {
            Integer n = std::stoll(text);
            return {n, n};
        }
        Integer a = std::stoll(text.substr(0, pos)), b = std::stoll(text.substr(pos + 2));
        if (a > b) throw UsageError("empty range " + text);
        return {a, b};
    } catch (const std::logic_error&) {
        throw UsageError("bad range '" + text + "', expected a..b");
    }
}

Coweight random_coweight(const CartanData& c, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    Coweight v(c.size());
    for (int i = 0; i < c.size(); ++i) v(i) = make_rational(num(rng), den(rng));
    return v;
}

// Root window memoized under HEARTLAB_CACHE_DIR.
std::vector<AffineRoot> cached_window(const CartanData& c, Integer n_max)
{
    const char* dir = std::getenv("HEARTLAB_CACHE_DIR");
    fs::path file;
    if (dir && *dir) {
        file = fs::path(dir) / ("roots-" + c.type.name() + "-" + std::to_string(n_max) + ".json");
        std::ifstream in(file);
        if (in) {
            json j = json::parse(in, nullptr, false);
            if (!j.is_discarded()) {
                std::vector<AffineRoot> out;
                for (const auto& e : j) {
                    auto a = e.at("alpha").get<std::vector<Integer>>();
                    AffineRoot r{VectorZ(c.size()), e.at("n").get<Integer>()};
                    for (int i = 0; i < c.size(); ++i) r.alpha(i) = a.at(i);
                    out.push_back(r);
                }
                return out;
            }
        }
    }
    auto roots = window_roots(c, n_max);
    if (!file.empty()) {
        json j = json::array();
        for (const auto& r : roots)
            j.push_back({{"alpha", std::vector<Integer>(r.alpha.data(), r.alpha.data() + r.alpha.size())}, {"n", r.n}});
        std::error_code ec;
        fs::create_directories(file.parent_path(), ec);
        std::ofstream(file) << j.dump();
    }
    return roots;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"heartlab: affine root systems, heart fans and stability conditions on Kleinian resolutions"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--type", g.type, "Dynkin type: A1..A8, D4..D8, E6, E7, E8")->capture_default_str();
    app.add_option("--seed", g.seed, "RNG seed for sampled checks")->capture_default_str();
    app.add_option("--out", g.out, "output file (stdout when empty)");
    auto* format_opt = app.add_option("--format", g.format, "json, csv or svg (fan defaults to svg)")->check(CLI::IsMember({"json", "csv", "svg"}));

    std::string basis, theta_text, omega_text, J_text, lambda_text, range_text = "-3..3", rep_path, samples_out;
    std::string interval_text = "up";
    int samples = 200, random_count = 0, lmax = 2, t_max = 2, max_length = 10;
    Integer n_max = 2;
    double radius = 2.5;

    auto* fan = app.add_subcommand("fan", "render the heart fan slices and sample located points");
    fan->add_option("--samples", samples, "number of sampled coweights")->capture_default_str();
    fan->add_option("--samples-out", samples_out, "sampled-point JSON path (default: --out with .json)");
    fan->add_option("--radius", radius, "viewport half-width on the slice")->capture_default_str();
    fan->add_option("--max-length", max_length, "longest Weyl element drawn")->capture_default_str();

    auto* locate = app.add_subcommand("locate", "maximal and minimal hearts whose cone contains theta");
    locate->add_option("--theta", theta_text, "coweight coordinates")->required();
    locate->add_option("--basis", basis, "lambda or omega (default: by length)");

    auto* normalize = app.add_subcommand("normalize", "normalize a central charge Z = -theta + i omega");
    normalize->add_option("--theta", theta_text, "real part coordinates (negated)");
    normalize->add_option("--omega", omega_text, "imaginary part coordinates");
    normalize->add_option("--basis", basis, "lambda or omega (default: by length)");
    normalize->add_option("--interval", interval_text, "up = (0,1], down = [0,1)")->check(CLI::IsMember({"up", "down"}));
    normalize->add_option("--random", random_count, "check this many seeded random charges instead");

    auto* arc = app.add_subcommand("arc", "verify the stability arc of Z = lambda + i theta_0");
    arc->add_option("--J", J_text, "comma-separated finite nodes")->required();
    arc->add_option("--lambda", lambda_text, "lambda coordinates (default: sum over J)");
    arc->add_option("--n", range_text, "range a..b of arc indices")->capture_default_str();

    auto* hn = app.add_subcommand("hn", "Harder-Narasimhan filtration of a nilpotent representation");
    hn->add_option("--rep", rep_path, "representation JSON")->required()->check(CLI::ExistingFile);
    hn->add_option("--theta", theta_text, "King stability coweight")->required();
    hn->add_option("--basis", basis, "lambda or omega (default: by length)");

    auto* roots = app.add_subcommand("roots", "affine roots in a window, classified against Delta_J");
    roots->add_option("--J", J_text, "comma-separated finite nodes");
    roots->add_option("--n-max", n_max, "window |n| <= n-max")->capture_default_str();

    auto* chr = app.add_subcommand("char", "character of n+_{ell,J} two ways");
    chr->add_option("--J", J_text, "comma-separated finite nodes")->required();
    chr->add_option("--lambda", lambda_text, "lambda coordinates (default: sum over J)");
    chr->add_option("--n-max", n_max, "delta window")->capture_default_str();
    chr->add_option("--t-max", t_max, "t-degree window")->capture_default_str();

    auto* ell = app.add_subcommand("ellcheck", "classical limit of the affine Yangian relations");
    ell->add_option("--lmax", lmax, "largest loop index")->capture_default_str();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        const CartanData c = build_cartan(parse_dynkin(g.type));

        if (*fan) {
            FanOptions opt;
            opt.radius = radius;
            opt.max_length = max_length;
            json pts = sample_fan_points(c, samples, g.seed);
            int bad = revalidate_fan_points(c, pts);
            pts["revalidated"] = bad == 0;
            if (format_opt->count() > 0 && g.format == "json") return emit_json(g, pts, bad == 0);
            emit(g, render_fan_svg(c, opt));
            std::string path = samples_out;
            if (path.empty() && !g.out.empty()) path = fs::path(g.out).replace_extension(".json").string();
            if (!path.empty()) std::ofstream(path) << pts.dump(2);
            if (bad) std::cerr << bad << " sampled points failed to re-validate\n";
            return bad == 0 ? kOk : kCounterexample;
        }

        if (*locate) {
            Coweight theta = parse_coweight(c, theta_text, basis);
            if (is_zero(theta)) throw UsageError("theta must be nonzero");
            HeartLocation loc = locate_heart_cone(c, theta);
            bool ok = in_heart_cone(c, theta, loc.upper) && in_heart_cone(c, theta, loc.lower);
            return emit_json(g, {{"theta", coweight_to_json(theta)}, {"upper", heart_to_json(loc.upper)},
                                 {"lower", heart_to_json(loc.lower)}, {"ok", ok}},
                             ok);
        }

        if (*normalize) {
            Interval interval = interval_text == "up" ? Interval::HalfOpenUp : Interval::HalfOpenDown;
            std::vector<CentralCharge> charges;
            if (random_count > 0) {
                std::mt19937_64 rng(g.seed);
                while (static_cast<int>(charges.size()) < random_count) {
                    CentralCharge z{random_coweight(c, rng), random_coweight(c, rng)};
                    if (in_hreg(c, z)) charges.push_back(z);
                }
            } else {
                if (theta_text.empty() || omega_text.empty()) throw UsageError("normalize needs --theta and --omega, or --random");
                CentralCharge z{parse_coweight(c, theta_text, basis), parse_coweight(c, omega_text, basis)};
                if (!in_hreg(c, z)) throw UsageError("Z vanishes on a root");
                charges.push_back(z);
            }
            json reports = json::array();
            bool all_ok = true;
            for (const auto& z : charges) {
                NormalizationResult r = normalize_stability(c, z, interval);
                CentralCharge again = act(r.element, shifted(z, r.shift));
                bool ok = again.theta == r.normalized.theta && again.omega == r.normalized.omega &&
                          is_stability_function(c, r.normalized, r.J, r.flavor, interval);
                all_ok = all_ok && ok;
                json j = normalization_to_json(r);
                j["ok"] = ok;
                reports.push_back(j);
            }
            json out = random_count > 0 ? json{{"count", charges.size()}, {"ok", all_ok}, {"results", reports}} : reports[0];
            return emit_json(g, out, all_ok);
        }

        if (*arc) {
            std::vector<int> J = parse_J(c, J_text);
            if (J.empty()) throw UsageError("arc needs a nonempty J");
            FiniteCoweight lam = lambda_text.empty() ? sum_lambda(c, J) : parse_finite(c, lambda_text);
            if (!is_piJ_ample(c, lam, J)) throw UsageError("lambda must pair positively exactly with the nodes in J");
            auto [a, b] = parse_range(range_text);
            SlicingReport rep = verify_slicing(c, lam, J, a, b);
            return emit_json(g, slicing_to_json(rep), rep.ok);
        }

        if (*hn) {
            std::ifstream in(rep_path);
            json j = json::parse(in, nullptr, false);
            if (j.is_discarded()) throw UsageError("cannot parse " + rep_path);
            Rep rep = rep_from_json(c, j);
            Validation v = validate(c, rep);
            if (!v.ok) throw UsageError("invalid representation: " + v.reason);
            Coweight theta = parse_coweight(c, theta_text, basis);
            HNFiltration f = hn_filtration(c, rep, theta);
            bool ok = true;
            for (std::size_t i = 1; i < f.slopes.size(); ++i) ok = ok && f.slopes[i] < f.slopes[i - 1];
            json out = hn_to_json(f);
            out["ok"] = ok;
            return emit_json(g, out, ok);
        }

        if (*roots) {
            std::vector<int> J = parse_J(c, J_text);
            auto window = cached_window(c, n_max);
            PositivityReport pos = positivity_axioms(c, J, n_max);
            if (g.format == "csv") {
                std::ostringstream os;
                os << "root,real,in_Delta_J\n";
                for (const auto& r : window)
                    os << to_string(r) << "," << (is_zero(r.alpha) ? 0 : 1) << "," << (in_Delta_J(c, J, r) ? 1 : 0) << "\n";
                emit(g, os.str());
                return pos.ok() ? kOk : kCounterexample;
            }
            json list = json::array();
            for (const auto& r : window)
                list.push_back({{"root", root_to_json(c, r.in_Y(c))}, {"label", to_string(r)}, {"in_Delta_J", in_Delta_J(c, J, r)}});
            json out{{"type", c.type.name()}, {"J", J}, {"n_max", n_max}, {"roots", list},
                     {"partition_ok", pos.partition_ok}, {"closure_ok", pos.closure_ok}, {"failures", pos.failures}};
            return emit_json(g, out, pos.ok());
        }

        if (*chr) {
            std::vector<int> J = parse_J(c, J_text);
            FiniteCoweight lam = lambda_text.empty() ? sum_lambda(c, J) : parse_finite(c, lambda_text);
            if (!is_piJ_ample(c, lam, J)) throw UsageError("lambda must pair positively exactly with the nodes in J");
            CharacterComparison cmp = character_n_ell_J(c, J, lam, n_max, t_max);
            if (g.format == "csv") {
                emit(g, character_csv(c, cmp.from_roots));
                return cmp.agree ? kOk : kCounterexample;
            }
            json out{{"type", c.type.name()}, {"J", J}, {"from_roots", character_to_json(cmp.from_roots)},
                     {"from_decomposition", character_to_json(cmp.from_decomposition)}, {"agree", cmp.agree}};
            return emit_json(g, out, cmp.agree);
        }

        if (*ell) {
            if (lmax < 0) throw UsageError("lmax must be nonnegative");
            ClassicalReport r = check_classical_relations(c, lmax);
            return emit_json(g, classical_report_to_json(r), r.ok);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCounterexample;
    }
    return kUsage;
}

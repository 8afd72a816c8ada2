#include "hallq/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hallq/flag.hpp"
#include "hallq/gkm.hpp"
#include "hallq/interpolate.hpp"
#include "hallq/render.hpp"
#include "hallq/verify.hpp"

namespace hallq::cli {

using nlohmann::json;

namespace {

class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

std::vector<long long> parse_csv_ll(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw config_error("empty entry in list: " + s);
        out.push_back(std::stoll(item));
    }
    if (out.empty()) throw config_error("empty list");
    return out;
}

Quiver quiver_from_json(const json& j) {
    Quiver q;
    q.labels = j.at("vertices").get<std::vector<int>>();
    for (const auto& a : j.at("arrows")) {
        if (!a.is_array() || a.size() != 2) throw config_error("arrow must be a pair");
        q.arrows.push_back({q.index_of(a[0].get<int>()), q.index_of(a[1].get<int>())});
    }
    q.validate();
    return q;
}

void load_quiver(JobConfig& cfg, const std::string& spec) {
    if (spec == "a2" || spec == "a3" || spec == "two-points") {
        cfg.quiver = quiver_preset(spec);
        cfg.quiver_name = spec;
        return;
    }
    std::ifstream in(spec);
    if (!in) throw config_error("cannot open quiver file: " + spec);
    json j;
    in >> j;
    cfg.quiver = quiver_from_json(j);
    cfg.quiver_name = "custom";
}

void load_config_file(JobConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw config_error(std::string("config parse: ") + e.what());
    }
    if (j.contains("quiver")) {
        if (j["quiver"].is_string()) load_quiver(cfg, j["quiver"].get<std::string>());
        else {
            cfg.quiver = quiver_from_json(j["quiver"]);
            cfg.quiver_name = "custom";
        }
    }
    if (j.contains("q")) {
        if (j["q"].is_array()) cfg.primes = j["q"].get<std::vector<long long>>();
        else cfg.primes = {j["q"].get<long long>()};
    }
    if (j.contains("n")) cfg.n = j["n"].get<int>();
    if (j.contains("twist")) {
        std::string t = j["twist"].get<std::string>();
        if (t != "half" && t != "integer") throw config_error("twist must be half or integer");
        cfg.twist = t == "half" ? TwistMode::half : TwistMode::integer;
    }
    if (j.contains("budget")) cfg.budget = j["budget"].get<std::uint64_t>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("format")) cfg.format = j["format"].get<std::string>();
}

void validate_config(const JobConfig& cfg) {
    if (cfg.primes.empty()) throw config_error("need at least one prime q");
    for (long long q : cfg.primes)
        if (!is_prime(q)) throw config_error("q must be prime, got " + std::to_string(q));
    if (cfg.n < 1) throw config_error("n must be >= 1");
    if (cfg.budget == 0) throw config_error("budget must be positive");
    if (cfg.format != "text" && cfg.format != "json")
        throw config_error("format must be text or json");
}

Context make_context(const JobConfig& cfg) {
    return Context(cfg.quiver, RingParams{static_cast<int>(cfg.primes[0]), cfg.n}, cfg.twist,
                   cfg.budget);
}

std::string twist_name(TwistMode t) { return t == TwistMode::half ? "half" : "integer"; }

std::string config_echo(const JobConfig& cfg, bool with_q = true) {
    std::string out = "quiver=" + cfg.quiver_name;
    if (with_q) {
        out += " q=";
        for (size_t i = 0; i < cfg.primes.size(); ++i)
            out += (i ? "," : "") + std::to_string(cfg.primes[i]);
    }
    out += " n=" + std::to_string(cfg.n) + " twist=" + twist_name(cfg.twist);
    return out;
}

json config_json(const JobConfig& cfg) {
    return json{{"quiver", cfg.quiver_name},
                {"q", cfg.primes},
                {"n", cfg.n},
                {"twist", twist_name(cfg.twist)},
                {"budget", cfg.budget},
                {"seed", cfg.seed}};
}

DimVec parse_dim(const JobConfig& cfg, const std::string& s) {
    auto vals = parse_csv_ll(s);
    if (static_cast<int>(vals.size()) != cfg.quiver.vertex_count())
        throw config_error("dimension vector needs " +
                           std::to_string(cfg.quiver.vertex_count()) + " entries");
    DimVec out;
    for (long long v : vals) {
        if (v < 0) throw config_error("negative rank in dimension vector");
        out.push_back(static_cast<int>(v));
    }
    return out;
}

std::vector<int> parse_word(const JobConfig& cfg, const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    for (long long label : parse_csv_ll(s)) {
        try {
            out.push_back(cfg.quiver.index_of(static_cast<int>(label)));
        } catch (const std::invalid_argument& e) {
            throw config_error(e.what());
        }
    }
    return out;
}

FlagType parse_flag_type(const JobConfig& cfg, const std::string& s) {
    FlagType out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t colon = item.find(':');
        if (colon == std::string::npos) throw config_error("flag steps are vertex:mult pairs");
        int label = std::stoi(item.substr(0, colon));
        int mult = std::stoi(item.substr(colon + 1));
        try {
            out.push_back({cfg.quiver.index_of(label), mult});
        } catch (const std::invalid_argument& e) {
            throw config_error(e.what());
        }
        if (mult < 1) throw config_error("flag multiplicity must be positive");
    }
    if (out.empty()) throw config_error("empty flag type");
    return out;
}

// ---- subcommand bodies --------------------------------------------------

int cmd_classify(const JobConfig& cfg, const std::string& dim_s, std::ostream& out) {
    Context ctx = make_context(cfg);
    DimVec dim = parse_dim(cfg, dim_s);
    const auto& classes = ctx.classes(dim);
    if (cfg.format == "json") {
        json arr = json::array();
        for (const FreeRep& rep : classes) {
            json r = rep_json(ctx.ring(), rep);
            r["aut"] = ctx.aut(rep);
            arr.push_back(std::move(r));
        }
        json doc{{"command", "classify"}, {"config", config_json(cfg)}, {"dim", dim},
                 {"classes", std::move(arr)}};
        out << doc.dump(2) << "\n";
        return 0;
    }
    out << "# classify dim=" << dim_str(dim) << " " << config_echo(cfg) << "\n";
    for (const FreeRep& rep : classes)
        out << "  " << rep_str(ctx.ring(), rep) << "  aut=" << ctx.aut(rep) << "\n";
    out << "classes: " << classes.size() << "\n";
    return 0;
}

int cmd_product(const JobConfig& cfg, const std::string& word_s, std::ostream& out) {
    Context ctx = make_context(cfg);
    std::vector<int> word = parse_word(cfg, word_s);
    HallElement elem = ctx.word_product(word);
    if (cfg.format == "json") {
        json doc{{"command", "product"},
                 {"config", config_json(cfg)},
                 {"word", word_s},
                 {"element", hall_element_json(ctx.ring(), elem)}};
        out << doc.dump(2) << "\n";
        return 0;
    }
    out << "# product word=" << (word_s.empty() ? "(empty)" : word_s) << " "
        << config_echo(cfg) << "\n";
    out << hall_table_text(ctx.ring(), elem);
    return 0;
}

int cmd_delta_check(const JobConfig& cfg, int tpow, std::ostream& out) {
    if (cfg.quiver.arrow_count() != 1)
        throw config_error("delta-check needs a single-arrow quiver");
    if (tpow < 0 || tpow > cfg.n) throw config_error("tpow must lie in [0, n]");
    Context ctx = make_context(cfg);
    const Arrow& h = ctx.quiver().arrows[0];
    DimVec dim(ctx.quiver().vertex_count(), 0);
    dim[h.src] = dim[h.dst] = 1;
    FreeRep m = zero_rep(ctx.quiver(), ctx.ring(), dim);
    m.maps[0].at(0, 0) = ctx.ring().t_pow(tpow);
    DeltaReport report = ctx.check_delta_homomorphism(m, m);
    if (cfg.format == "json") {
        json lhs_only = json::array(), rhs_only = json::array();
        for (auto& key : report.lhs_only)
            lhs_only.push_back(json{{"left", rep_json(ctx.ring(), key.first)},
                                    {"right", rep_json(ctx.ring(), key.second)}});
        for (auto& key : report.rhs_only)
            rhs_only.push_back(json{{"left", rep_json(ctx.ring(), key.first)},
                                    {"right", rep_json(ctx.ring(), key.second)}});
        json doc{{"command", "delta-check"},
                 {"config", config_json(cfg)},
                 {"tpow", tpow},
                 {"homomorphism", report.homomorphism},
                 {"lhs", tensor_element_json(ctx.ring(), report.lhs)},
                 {"rhs", tensor_element_json(ctx.ring(), report.rhs)},
                 {"lhs_only", std::move(lhs_only)},
                 {"rhs_only", std::move(rhs_only)}};
        out << doc.dump(2) << "\n";
        return 0;
    }
    out << "# delta-check tpow=" << tpow << " " << config_echo(cfg) << "\n";
    out << "M = N = " << rep_str(ctx.ring(), m) << "\n";
    out << "verdict: " << (report.homomorphism ? "homomorphism" : "NOT a homomorphism") << "\n";
    if (!report.lhs_only.empty()) {
        out << "support only in Delta(MN):\n";
        for (auto& key : report.lhs_only)
            out << "  " << rep_str(ctx.ring(), key.first) << " (x) "
                << rep_str(ctx.ring(), key.second) << "\n";
    }
    if (!report.rhs_only.empty()) {
        out << "support only in Delta(M)Delta(N):\n";
        for (auto& key : report.rhs_only)
            out << "  " << rep_str(ctx.ring(), key.first) << " (x) "
                << rep_str(ctx.ring(), key.second) << "\n";
    }
    return 0;
}

int cmd_serre(const JobConfig& cfg, int ilabel, int jlabel, const std::string& coeff_s,
              std::ostream& out) {
    Context ctx = make_context(cfg);
    LaurentPoly coeff;
    try {
        coeff = parse_laurent(coeff_s);
    } catch (const std::invalid_argument& e) {
        throw config_error(e.what());
    }
    int i, j;
    try {
        i = cfg.quiver.index_of(ilabel);
        j = cfg.quiver.index_of(jlabel);
    } catch (const std::invalid_argument& e) {
        throw config_error(e.what());
    }
    HallElement residual = serre_residual(ctx, i, j, coeff);
    if (cfg.format == "json") {
        json doc{{"command", "serre"},
                 {"config", config_json(cfg)},
                 {"i", ilabel},
                 {"j", jlabel},
                 {"coeff", coeff.str()},
                 {"zero", residual.is_zero()},
                 {"residual", hall_element_json(ctx.ring(), residual)}};
        out << doc.dump(2) << "\n";
        return 0;
    }
    out << "# serre i=" << ilabel << " j=" << jlabel << " coeff=" << coeff.str() << " "
        << config_echo(cfg) << "\n";
    out << "residual: " << (residual.is_zero() ? "zero" : "nonzero") << "\n";
    if (!residual.is_zero()) out << hall_table_text(ctx.ring(), residual);
    return 0;
}

int cmd_commute(const JobConfig& cfg, int ilabel, int jlabel, std::ostream& out) {
    Context ctx = make_context(cfg);
    bool equal;
    try {
        equal = commutation_check(ctx, cfg.quiver.index_of(ilabel), cfg.quiver.index_of(jlabel));
    } catch (const std::invalid_argument& e) {
        throw config_error(e.what());
    }
    if (cfg.format == "json") {
        json doc{{"command", "commute"},
                 {"config", config_json(cfg)},
                 {"i", ilabel},
                 {"j", jlabel},
                 {"commute", equal}};
        out << doc.dump(2) << "\n";
    } else {
        out << "# commute i=" << ilabel << " j=" << jlabel << " " << config_echo(cfg) << "\n";
        out << "S_i S_j = S_j S_i: " << (equal ? "yes" : "no") << "\n";
    }
    return equal ? 0 : 1;
}

int cmd_geom(const JobConfig& cfg, const std::string& flag_s, const std::string& tdim_s,
             const std::string& wdim_s, std::ostream& out) {
    FlagType ft = parse_flag_type(cfg, flag_s);
    FlagDims dims = flag_dims(cfg.quiver, ft, cfg.n);
    DimVec rank = flag_rank_vector(cfg.quiver, ft);
    bool have_tw = !tdim_s.empty() || !wdim_s.empty();
    DimVec tdim, wdim;
    long long d1 = 0, d2 = 0, ishift = 0, rshift = 0;
    if (have_tw) {
        if (tdim_s.empty() || wdim_s.empty())
            throw config_error("geom needs both --tdim and --wdim, or neither");
        tdim = parse_dim(cfg, tdim_s);
        wdim = parse_dim(cfg, wdim_s);
        std::tie(d1, d2) = d1_d2(cfg.quiver, tdim, wdim, cfg.n);
        ishift = induction_shift(cfg.quiver, tdim, wdim, cfg.n);
        rshift = restriction_shift(cfg.quiver, tdim, wdim, cfg.n);
    }
    if (cfg.format == "json") {
        json nv = json::array(), nh = json::array();
        for (int i = 0; i < cfg.quiver.vertex_count(); ++i)
            nv.push_back(json{{"vertex", cfg.quiver.labels[i]}, {"N", n_vertex(ft, i)}});
        for (const Arrow& h : cfg.quiver.arrows)
            nh.push_back(json{{"src", cfg.quiver.labels[h.src]},
                              {"dst", cfg.quiver.labels[h.dst]},
                              {"N", n_arrow(ft, h)}});
        json doc{{"command", "geom"},        {"config", config_json(cfg)},
                 {"flag", flag_s},           {"n_vertex", std::move(nv)},
                 {"n_arrow", std::move(nh)}, {"flag_dim", dims.flag_dim},
                 {"bundle_rank", dims.bundle_rank}, {"total_dim", dims.total_dim},
                 {"perverse_shift", dims.perverse_shift}, {"rank_vector", rank}};
        if (have_tw) {
            doc["d1"] = d1;
            doc["d2"] = d2;
            doc["induction_shift"] = ishift;
            doc["restriction_shift"] = rshift;
        }
        out << doc.dump(2) << "\n";
        return 0;
    }
    out << "# geom flag=" << flag_s << " " << config_echo(cfg, false) << "\n";
    out << "N_i:";
    for (int i = 0; i < cfg.quiver.vertex_count(); ++i)
        out << " " << cfg.quiver.labels[i] << ":" << n_vertex(ft, i);
    out << "\nN_h:";
    for (const Arrow& h : cfg.quiver.arrows)
        out << " " << cfg.quiver.labels[h.src] << "->" << cfg.quiver.labels[h.dst] << ":"
            << n_arrow(ft, h);
    out << "\nflag_dim " << dims.flag_dim << "\nbundle_rank " << dims.bundle_rank
        << "\ntotal_dim " << dims.total_dim << "\nperverse_shift " << dims.perverse_shift
        << "\nrank_vector " << dim_str(rank) << "\n";
    if (have_tw)
        out << "d1 " << d1 << "\nd2 " << d2 << "\ninduction_shift " << ishift
            << "\nrestriction_shift " << rshift << "\n";
    return 0;
}

int cmd_grassmann(const JobConfig& cfg, int s, int l, std::ostream& out) {
    if (s < 0 || l < 0 || s > l) throw config_error("grassmann needs 0 <= s <= l");
    Ring R(RingParams{static_cast<int>(cfg.primes[0]), cfg.n});
    std::uint64_t count = free_grassmannian_count(R, s, l, cfg.budget);
    if (cfg.format == "json") {
        json doc{{"command", "grassmann"}, {"config", config_json(cfg)},
                 {"s", s},                 {"l", l},
                 {"count", count}};
        out << doc.dump(2) << "\n";
    } else {
        out << "# grassmann s=" << s << " l=" << l << " " << config_echo(cfg) << "\n";
        out << "count " << count << "\n";
    }
    return 0;
}

int cmd_interpolate(const JobConfig& cfg, const std::string& word_s, std::ostream& out) {
    if (cfg.primes.size() < 2) throw config_error("interpolate needs a list of primes");
    std::vector<int> word = parse_word(cfg, word_s);
    WordInterpolation wi;
    try {
        wi = interpolate_word(cfg.quiver, cfg.n, cfg.primes, word, cfg.budget);
    } catch (const std::invalid_argument& e) {
        throw config_error(e.what());
    }
    Ring R0(RingParams{static_cast<int>(cfg.primes[0]), cfg.n});
    if (cfg.format == "json") {
        json terms = json::array();
        for (const InterpolatedTerm& t : wi.terms) {
            json row = rep_json(R0, t.rep);
            row["poly"] = t.poly.str();
            row["coeff"] = t.coeff.str();
            terms.push_back(std::move(row));
        }
        json doc{{"command", "interpolate"},
                 {"config", config_json(cfg)},
                 {"word", word_s},
                 {"twist_exponent", wi.twist_exponent},
                 {"terms", std::move(terms)}};
        out << doc.dump(2) << "\n";
        return 0;
    }
    out << "# interpolate word=" << (word_s.empty() ? "(empty)" : word_s) << " "
        << config_echo(cfg) << "\n";
    out << "twist monomial v^" << wi.twist_exponent << "\n";
    size_t width = 0;
    for (const InterpolatedTerm& t : wi.terms)
        width = std::max(width, rep_str(R0, t.rep).size());
    for (const InterpolatedTerm& t : wi.terms) {
        std::string r = rep_str(R0, t.rep);
        out << "  " << r << std::string(width - r.size() + 2, ' ') << "poly " << t.poly.str()
            << "   coeff " << t.coeff.str() << "\n";
    }
    return 0;
}

int cmd_accept(const JobConfig& cfg, std::ostream& out) {
    if (cfg.format == "json") {
        auto results = verify::run_acceptance(cfg.seed);
        bool all = true;
        json arr = json::array();
        for (const auto& r : results) {
            all &= r.passed;
            arr.push_back(json{{"number", r.number},
                               {"name", r.name},
                               {"passed", r.passed},
                               {"detail", r.detail}});
        }
        json doc{{"command", "accept"}, {"seed", cfg.seed}, {"passed", all},
                 {"criteria", std::move(arr)}};
        out << doc.dump(2) << "\n";
        return all ? 0 : 1;
    }
    out << "# accept seed=" << cfg.seed << "\n";
    return verify::print_acceptance(out, cfg.seed) ? 0 : 1;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Hall algebra computations for free quiver representations over "
                 "F_q[t]/(t^n)"};
    app.require_subcommand(1);

    std::string config_path, quiver_spec, q_list, twist_s, format_s;
    JobConfig cfg;
    app.add_option("--config", config_path, "JSON configuration file");
    app.add_option("--quiver", quiver_spec, "preset name (a2, a3, two-points) or JSON file");
    app.add_option("--q", q_list, "prime q, or comma-separated list for interpolate");
    app.add_option("--n", cfg.n, "nilpotency degree of t");
    app.add_option("--twist", twist_s, "half or integer");
    app.add_option("--format", format_s, "text or json");
    app.add_option("--budget", cfg.budget, "enumeration budget cap");
    app.add_option("--seed", cfg.seed, "seed for randomized property instances");

    std::string dim_s, word_s, flag_s, tdim_s, wdim_s, coeff_s = "v + v^-1";
    int tpow = 1, ilabel = 0, jlabel = 0, s_rank = 0, l_rank = 0;

    CLI::App* classify = app.add_subcommand("classify", "isomorphism classes at a dimension");
    classify->add_option("--dim", dim_s, "dimension vector, e.g. 1,1")->required();

    CLI::App* product = app.add_subcommand("product", "product of a word of simples");
    product->add_option("--word", word_s, "vertex labels, e.g. 1,2,1");

    CLI::App* delta = app.add_subcommand("delta-check", "coproduct homomorphism check");
    delta->add_option("--tpow", tpow, "M = N = (R -t^tpow-> R); n means the zero map");

    CLI::App* serre = app.add_subcommand("serre", "quantum Serre residual");
    serre->add_option("--i", ilabel, "first vertex label")->required();
    serre->add_option("--j", jlabel, "second vertex label")->required();
    serre->add_option("--coeff", coeff_s, "Laurent coefficient, default v + v^-1");

    CLI::App* commute = app.add_subcommand("commute", "generator commutation check");
    commute->add_option("--i", ilabel, "first vertex label")->required();
    commute->add_option("--j", jlabel, "second vertex label")->required();

    CLI::App* geom = app.add_subcommand("geom", "flag variety dimensions and shifts");
    geom->add_option("--flag", flag_s, "flag type, e.g. 1:1,2:1")->required();
    geom->add_option("--tdim", tdim_s, "quotient rank vector for d1/d2");
    geom->add_option("--wdim", wdim_s, "sub rank vector for d1/d2");

    CLI::App* grass = app.add_subcommand("grassmann", "free Grassmannian point count");
    grass->add_option("--s", s_rank, "summand rank")->required();
    grass->add_option("--l", l_rank, "ambient rank")->required();

    CLI::App* interp = app.add_subcommand("interpolate",
                                          "structure constants as polynomials in q");
    interp->add_option("--word", word_s, "vertex labels, e.g. 1,2");

    CLI::App* accept = app.add_subcommand("accept", "run the acceptance suite");

    // global flags may follow the subcommand name
    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (!config_path.empty()) load_config_file(cfg, config_path);
        // flags override the config file
        if (!quiver_spec.empty()) load_quiver(cfg, quiver_spec);
        if (!q_list.empty()) cfg.primes = parse_csv_ll(q_list);
        if (app.count("--n")) cfg.n = static_cast<int>(app["--n"]->as<int>());
        if (!twist_s.empty()) {
            if (twist_s != "half" && twist_s != "integer")
                throw config_error("twist must be half or integer");
            cfg.twist = twist_s == "half" ? TwistMode::half : TwistMode::integer;
        }
        if (!format_s.empty()) cfg.format = format_s;
        validate_config(cfg);

        // assemble the whole document first so failures never emit a
        // partial table
        std::ostringstream buf;
        int code = 2;
        if (*classify) code = cmd_classify(cfg, dim_s, buf);
        else if (*product) code = cmd_product(cfg, word_s, buf);
        else if (*delta) code = cmd_delta_check(cfg, tpow, buf);
        else if (*serre) code = cmd_serre(cfg, ilabel, jlabel, coeff_s, buf);
        else if (*commute) code = cmd_commute(cfg, ilabel, jlabel, buf);
        else if (*geom) code = cmd_geom(cfg, flag_s, tdim_s, wdim_s, buf);
        else if (*grass) code = cmd_grassmann(cfg, s_rank, l_rank, buf);
        else if (*interp) code = cmd_interpolate(cfg, word_s, buf);
        else if (*accept) code = cmd_accept(cfg, buf);
        else {
            err << "error: no subcommand\n";
            return 2;
        }
        out << buf.str();
        return code;
    } catch (const config_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const budget_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const interpolation_error& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace hallq::cli

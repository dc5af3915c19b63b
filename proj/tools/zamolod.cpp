#include <zamolod/zamolod.hpp>

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <thread>

using namespace zamolod;

namespace {

struct Source {
    std::string in;
    std::string family;
    int n = 0;
    int m = 0;
    std::string variant;

    void add(CLI::App* c) {
        c->add_option("--in", in, "biagram or exchange-matrix JSON file");
        c->add_option("--family", family, "catalog family id, e.g. B3bowtie1G2 or A2xA3-tensor");
        c->add_option("--n", n, "family parameter n");
        c->add_option("--m", m, "family parameter m");
        c->add_option("--variant", variant, "family variant, e.g. B3,A2 for tensor");
    }

    DynkinBiagram load() const {
        if (!in.empty() && !family.empty()) throw CLI::ValidationError("give either --in or --family, not both");
        if (!in.empty()) return read_biagram(in);
        if (!family.empty()) return build({family, n, m, variant});
        throw CLI::RequiredError("--in or --family");
    }

};

std::string vertex_list(const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += (s.empty() ? "" : " ") + std::to_string(x + 1);
    return s;
}

// "1 3 2", "1,3,2" -> 0-based
std::vector<int> parse_index_list(const std::string& s) {
    std::vector<int> out;
    std::string tok;
    std::stringstream ss(s);
    while (ss >> tok) {
        std::stringstream inner(tok);
        std::string part;
        while (std::getline(inner, part, ','))
            if (!part.empty()) out.push_back(std::stoi(part) - 1);
    }
    return out;
}

json biagram_json(const DynkinBiagram& bg) {
    json j = to_json(bg);
    j["b"] = to_json(to_exchange_matrix(bg))["b"];
    return j;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << text;
}

std::string rat_cell(const std::optional<Rat>& v) { return v ? rat_to_string(*v) : ""; }

char color_letter(MutationColor c) {
    switch (c) {
        case MutationColor::gamma: return 'G';
        case MutationColor::delta: return 'D';
        case MutationColor::tie: return '=';
    }
    return '?';
}

unsigned worker_count() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* e = std::getenv("ZAMOLOD_THREADS")) {
        long v = std::strtol(e, nullptr, 10);
        if (v >= 1) return std::min<unsigned>(hw, static_cast<unsigned>(v));
    }
    return hw;
}

// runs f(i) for i in [0, n) on a bounded pool; results land by index so output order is fixed
template <class F>
void parallel_for(std::size_t n, F f) {
    unsigned w = std::min<std::size_t>(worker_count(), std::max<std::size_t>(n, 1));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex err_m;
    for (unsigned k = 0; k < w; ++k)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < n;) {
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard lk(err_m);
                    if (!err) err = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

// ---------------------------------------------------------------- check

int run_check(const Source& src, bool as_json) {
    auto bg = src.load();
    auto m = to_exchange_matrix(bg);
    auto pairs = nonadmissible_pairs(bg);
    bool dynkin = is_dynkin_biagram(bg);
    bool recurrent = is_recurrent(m);
    json comps = json::object();
    for (auto [name, mat] : {std::pair{"gamma", &bg.gamma}, std::pair{"delta", &bg.delta}}) {
        json arr = json::array();
        try {
            for (auto& c : decompose_components(*mat).components)
                arr.push_back({{"type", c.type.name()}, {"vertices", vertex_list(c.vertices)}});
        } catch (const NonDynkinComponent& e) {
            arr.push_back({{"error", e.what()}});
        }
        comps[name] = arr;
    }
    json out{{"n", bg.n}, {"admissible", pairs.empty()}, {"dynkin", dynkin}, {"recurrent", recurrent},
             {"components", comps}};
    json w = json::array();
    for (auto [i, j] : pairs) w.push_back({i + 1, j + 1});
    out["witnesses"] = w;
    if (dynkin && pairs.empty()) {
        auto [hg, hd] = coxeter_numbers(bg);
        out["h_gamma"] = hg;
        out["h_delta"] = hd;
    }
    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "vertices   " << bg.n << "\n";
        for (auto name : {"gamma", "delta"}) {
            std::cout << name << "      ";
            bool first = true;
            for (auto& c : comps[name]) {
                std::cout << (first ? "" : ", ")
                          << (c.contains("error") ? c["error"].get<std::string>()
                                                  : c["type"].get<std::string>() + " {" +
                                                        c["vertices"].get<std::string>() + "}");
                first = false;
            }
            std::cout << "\n";
        }
        std::cout << "dynkin     " << (dynkin ? "yes" : "no") << "\n";
        std::cout << "admissible " << (pairs.empty() ? "yes" : "no") << "\n";
        for (auto [i, j] : pairs) std::cout << "  (Gamma Delta - Delta Gamma) nonzero at " << i + 1 << "," << j + 1 << "\n";
        std::cout << "recurrent  " << (recurrent ? "yes" : "no") << "\n";
        if (out.contains("h_gamma"))
            std::cout << "coxeter    h_gamma=" << out["h_gamma"] << " h_delta=" << out["h_delta"] << "\n";
    }
    return pairs.empty() && dynkin ? 0 : 2;
}

// ---------------------------------------------------------------- evolve

int run_evolve(const Source& src, int steps, const std::vector<std::string>& prints, bool as_json) {
    auto bg = src.load();
    auto tr = evolve(bg, steps);
    json out = json::array();
    auto emit = [&](std::size_t k, int t) {
        if (t < 0 || t > steps) throw IndexOutOfRange("t outside 0.." + std::to_string(steps));
        if (k >= bg.n) throw IndexOutOfRange("vertex outside 1.." + std::to_string(bg.n));
        auto& v = tr[t].values[k];
        std::string s = v ? to_string(*v) : "";
        if (as_json)
            out.push_back({{"k", k + 1}, {"t", t}, {"value", v ? json(s) : json(nullptr)}});
        else
            std::cout << "T" << k + 1 << "(" << t << ") = " << (v ? s : "(unpopulated)") << "\n";
    };
    if (prints.empty()) {
        for (int t = 0; t <= steps; ++t)
            for (std::size_t k = 0; k < bg.n; ++k)
                if (tr[t].values[k]) emit(k, t);
    } else {
        for (auto& p : prints) {
            auto idx = parse_index_list(p);
            if (idx.size() != 2) throw CLI::ValidationError("--print expects k,t");
            emit(static_cast<std::size_t>(idx[0]), idx[1] + 1);
        }
    }
    if (as_json) std::cout << out.dump(2) << "\n";
    return 0;
}

// ---------------------------------------------------------------- tropical

int run_tropical(const Source& src, const std::string& lam_s, int steps, std::string format, bool colors) {
    auto bg = src.load();
    auto lam = parse_lambda(lam_s, bg.n);
    auto tr = trop_evolve(bg, lam, steps - 1);
    int rows = steps;
    if (format == "json") {
        json out = json::array();
        for (int t = 0; t < rows; ++t) {
            json vals = json::array(), cols = json::array();
            for (std::size_t k = 0; k < bg.n; ++k) {
                auto& v = tr.states[t].values[k];
                vals.push_back(v ? json(rat_to_string(*v)) : json(nullptr));
                auto& c = tr.colors[t][k];
                cols.push_back(c ? json(color_name(*c)) : json(nullptr));
            }
            out.push_back({{"t", t}, {"values", vals}, {"colors", cols}});
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    auto cell = [&](int t, std::size_t k) {
        std::string s = rat_cell(tr.states[t].values[k]);
        if (colors && !s.empty() && tr.colors[t][k]) s += color_letter(*tr.colors[t][k]);
        return s;
    };
    if (format == "csv") {
        std::cout << "t";
        for (std::size_t k = 0; k < bg.n; ++k) std::cout << "," << k + 1;
        std::cout << "\n";
        for (int t = 0; t < rows; ++t) {
            std::cout << t;
            for (std::size_t k = 0; k < bg.n; ++k) std::cout << "," << cell(t, k);
            std::cout << "\n";
        }
        return 0;
    }
    if (format == "md") {
        std::cout << "| t |";
        for (std::size_t k = 0; k < bg.n; ++k) std::cout << " " << k + 1 << " |";
        std::cout << "\n|---|";
        for (std::size_t k = 0; k < bg.n; ++k) std::cout << "---|";
        std::cout << "\n";
        for (int t = 0; t < rows; ++t) {
            std::cout << "| " << t << " |";
            for (std::size_t k = 0; k < bg.n; ++k) std::cout << " " << cell(t, k) << " |";
            std::cout << "\n";
        }
        return 0;
    }
    std::size_t w = std::to_string(rows).size();
    for (int t = 0; t < rows; ++t)
        for (std::size_t k = 0; k < bg.n; ++k) w = std::max(w, cell(t, k).size());
    w += 2;
    std::cout << std::setw(static_cast<int>(std::to_string(rows).size()) + 1) << "t";
    for (std::size_t k = 0; k < bg.n; ++k) std::cout << std::setw(static_cast<int>(w)) << k + 1;
    std::cout << "\n";
    for (int t = 0; t < rows; ++t) {
        std::cout << std::setw(static_cast<int>(std::to_string(rows).size()) + 1) << t;
        for (std::size_t k = 0; k < bg.n; ++k) std::cout << std::setw(static_cast<int>(w)) << cell(t, k);
        std::cout << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- period

int run_period(const Source& src, const std::string& mode, int max_N, const std::string& lam_s, bool as_json) {
    auto bg = src.load();
    std::optional<int> p;
    if (mode == "exact") {
        p = max_N > 0 ? detect_period(bg, max_N) : detect_period(bg);
    } else {
        int cap = max_N > 0 ? max_N : [&] {
            auto [hg, hd] = coxeter_numbers(bg);
            return hg + hd + 2;
        }();
        if (!lam_s.empty()) {
            p = trop_period(bg, parse_lambda(lam_s, bg.n), cap);
        } else {
            try {
                p = delta_labelings_oracle(bg, cap).N;
            } catch (const Error&) {
                p = std::nullopt;
            }
        }
    }
    if (as_json)
        std::cout << json{{"mode", mode}, {"period", p ? json(*p) : json(nullptr)}}.dump(2) << "\n";
    else if (p)
        std::cout << *p << "\n";
    else
        std::cout << "no period found\n";
    return p ? 0 : 2;
}

// ---------------------------------------------------------------- fold / flip

int run_fold(const Source& src, const std::string& perm_s, const std::string& out_path, bool as_json) {
    auto bg = src.load();
    auto perm = parse_index_list(perm_s);
    auto m = to_exchange_matrix(bg);
    try {
        auto f = validate_automorphism(m, perm);
        auto folded = from_exchange_matrix(fold(m, f));
        json j = biagram_json(folded);
        json orbits = json::array();
        for (auto& o : f.orbits) orbits.push_back(vertex_list(o));
        j["orbits"] = orbits;
        write_text(out_path, j.dump(2) + "\n");
        return 0;
    } catch (const ViolatesCondition& e) {
        if (as_json)
            std::cout << json{{"error", e.what()}, {"condition", e.condition}, {"at", {e.i + 1, e.j + 1}}}.dump(2)
                      << "\n";
        else
            std::cerr << e.what() << "\n";
        return 2;
    }
}

int run_flip(const Source& src, const std::string& out_path) {
    write_text(out_path, biagram_json(global_flip(src.load())).dump(2) + "\n");
    return 0;
}

// ---------------------------------------------------------------- wcell

int run_wcell(const Source& src, const std::string& seed_s, int p, int q, int seed_vertex, bool verify, bool as_json) {
    auto bg = src.load();
    auto seeds = product_cell_seeds(bg);
    TauSet seed = seeds[0];
    if (!seed_s.empty()) {
        seed = 0;
        for (int g : parse_index_list(seed_s)) {
            if (g < 0 || g > 3) throw CLI::ValidationError("seed generators are 1..4");
            seed |= 1u << (g + 1);
        }
    }
    if (p <= 0 || q <= 0) {
        auto [hg, hd] = coxeter_numbers(bg);
        if (p <= 0) p = hg;
        if (q <= 0) q = hd;
    }
    auto c = build_product_cell(bg, seed, static_cast<std::size_t>(seed_vertex - 1));
    json out{{"seed", tau_to_string(seed)}, {"p", p}, {"q", q}};
    json taus = json::array();
    for (auto t : c.tau) taus.push_back(tau_to_string(t));
    out["tau"] = taus;
    HeckeReport rep;
    if (verify) {
        rep = verify_hecke_relations(c, p, q);
        json fails = json::array();
        for (auto& f : rep.failures)
            fails.push_back({{"relation", f.relation}, {"row", f.row + 1}, {"col", f.col + 1}, {"difference", f.entry}});
        out["checked"] = rep.checked;
        out["failures"] = fails;
    }
    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "seed " << tau_to_string(seed) << "  p=" << p << " q=" << q << "\n";
        for (std::size_t u = 0; u < c.n; ++u) std::cout << "  " << u + 1 << "  tau=" << tau_to_string(c.tau[u]) << "\n";
        if (verify) {
            std::cout << "relations checked " << rep.checked << ", failed " << rep.failures.size() << "\n";
            for (auto& f : rep.failures)
                std::cout << "  " << f.relation << " at (" << f.row + 1 << "," << f.col + 1 << "): " << f.entry << "\n";
        }
    }
    return rep.ok() ? 0 : 2;
}

// ---------------------------------------------------------------- conjecture

int run_conjecture(const Source& src, int trials, std::uint64_t seed, bool csv, const std::string& out_path,
                   bool as_json) {
    auto bg = src.load();
    auto res = conjecture_trials(bg, trials, seed);
    auto lam_text = [](const std::vector<Rat>& l) {
        std::string s;
        for (auto& x : l) s += (s.empty() ? "" : ",") + rat_to_string(x);
        return s;
    };
    int generic = 0, matching = 0;
    for (auto& t : res) {
        generic += t.generic();
        matching += t.generic() && t.matches();
    }
    if (csv) {
        std::ostringstream os;
        os << "trial,lambda,n_gamma,n_delta,n_tie,expected_gamma,expected_delta,match\n";
        for (std::size_t k = 0; k < res.size(); ++k) {
            auto& t = res[k];
            os << k + 1 << ",\"" << lam_text(t.lambda) << "\"," << t.counts.n_gamma << "," << t.counts.n_delta << ","
               << t.counts.n_tie << "," << t.expected_gamma << "," << t.expected_delta << ","
               << (t.generic() ? (t.matches() ? "yes" : "no") : "tie") << "\n";
        }
        write_text(out_path, os.str());
        return 0;
    }
    if (as_json) {
        json arr = json::array();
        for (auto& t : res)
            arr.push_back({{"lambda", lam_text(t.lambda)},
                           {"n_gamma", t.counts.n_gamma},
                           {"n_delta", t.counts.n_delta},
                           {"n_tie", t.counts.n_tie},
                           {"expected_gamma", t.expected_gamma},
                           {"expected_delta", t.expected_delta}});
        std::cout << json{{"trials", arr}, {"generic", generic}, {"matching", matching}}.dump(2) << "\n";
    } else {
        std::cout << "trials " << res.size() << ", generic " << generic << ", matching (h_gamma r, h_delta r) "
                  << matching << "\n";
        for (std::size_t k = 0; k < res.size(); ++k) {
            auto& t = res[k];
            std::cout << "  " << k + 1 << "  gamma " << t.counts.n_gamma << "/" << t.expected_gamma << "  delta "
                      << t.counts.n_delta << "/" << t.expected_delta << "  ties " << t.counts.n_tie << "\n";
        }
    }
    return 0;
}

// ---------------------------------------------------------------- sweep

struct SweepRow {
    std::string name;
    int rank = 0;
    bool admissible = false, recurrent = false, periodic = false;
    int hg = 0, hd = 0;
    std::string error;
    bool ok() const { return error.empty() && admissible && recurrent && periodic; }
};

SweepRow sweep_one(const FamilySpec& s, int trials, std::uint64_t seed) {
    SweepRow r;
    r.name = spec_name(s);
    try {
        auto bg = build(s);
        r.rank = static_cast<int>(bg.n);
        r.admissible = is_admissible(bg);
        r.recurrent = is_recurrent(to_exchange_matrix(bg));
        std::tie(r.hg, r.hd) = coxeter_numbers(bg);
        std::mt19937_64 rng(seed);
        r.periodic = true;
        for (int k = 0; k < trials && r.periodic; ++k) {
            auto p = trop_period(bg, random_labeling(bg.n, rng), r.hg + r.hd);
            r.periodic = p && (r.hg + r.hd) % *p == 0;
        }
    } catch (const std::exception& e) {
        r.error = e.what();
    }
    return r;
}

int run_sweep(int max_n, int max_m, int max_rank, int trials, std::uint64_t seed, const std::string& csv,
              bool as_json) {
    auto members = max_rank > 0 ? members_up_to_rank(max_rank) : sweep_members(max_n, max_m);
    std::vector<SweepRow> rows(members.size());
    parallel_for(members.size(), [&](std::size_t i) { rows[i] = sweep_one(members[i], trials, seed + i); });
    int bad = 0;
    for (auto& r : rows) bad += !r.ok();
    if (!csv.empty()) {
        std::ostringstream os;
        os << "member,rank,admissible,recurrent,h_gamma,h_delta,periodic,error\n";
        for (auto& r : rows)
            os << "\"" << r.name << "\"," << r.rank << "," << r.admissible << "," << r.recurrent << "," << r.hg << ","
               << r.hd << "," << r.periodic << ",\"" << r.error << "\"\n";
        write_text(csv, os.str());
    }
    if (as_json) {
        json arr = json::array();
        for (auto& r : rows)
            arr.push_back({{"member", r.name},
                           {"rank", r.rank},
                           {"admissible", r.admissible},
                           {"recurrent", r.recurrent},
                           {"h_gamma", r.hg},
                           {"h_delta", r.hd},
                           {"periodic", r.periodic},
                           {"error", r.error}});
        std::cout << json{{"members", arr}, {"failed", bad}}.dump(2) << "\n";
    } else if (csv != "-") {
        for (auto& r : rows)
            if (!r.ok()) std::cout << "FAIL " << r.name << (r.error.empty() ? "" : ": " + r.error) << "\n";
        std::cout << rows.size() << " members, " << rows.size() - bad << " passed, " << bad << " failed\n";
    }
    return bad ? 2 : 0;
}

// ---------------------------------------------------------------- catalog

int run_catalog_list(bool as_json) {
    if (as_json) {
        json arr = json::array();
        for (auto& f : family_table())
            arr.push_back({{"id", f.id}, {"label", f.label}, {"group", f.group}, {"uses_n", f.uses_n},
                           {"uses_m", f.uses_m}, {"min_n", f.min_n}, {"min_m", f.min_m}});
        arr.push_back({{"id", "XxY-tensor"}, {"label", "X (x) Y"}, {"group", "tensor"}});
        arr.push_back({{"id", "XxX-twist"}, {"label", "X x X"}, {"group", "twist"}});
        std::cout << arr.dump(2) << "\n";
        return 0;
    }
    std::size_t w = 0;
    for (auto& f : family_table()) w = std::max(w, f.id.size());
    for (auto& f : family_table()) {
        std::cout << std::left << std::setw(static_cast<int>(w + 2)) << f.id << std::setw(16) << f.group << f.label;
        if (f.uses_n) std::cout << "  n>=" << f.min_n;
        if (f.uses_m) std::cout << "  m>=" << f.min_m;
        std::cout << "\n";
    }
    std::cout << std::left << std::setw(static_cast<int>(w + 2)) << "XxY-tensor" << std::setw(16) << "tensor"
              << "X (x) Y for Dynkin types X, Y\n";
    std::cout << std::left << std::setw(static_cast<int>(w + 2)) << "XxX-twist" << std::setw(16) << "twist"
              << "X x X\n";
    return 0;
}

int run_catalog_build(const Source& src, const std::string& out_path) {
    write_text(out_path, biagram_json(src.load()).dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zamolod: exchange matrices, T-systems and Dynkin biagrams"};
    app.require_subcommand(1);
    int rc = 0;

    // catalog
    auto* cat = app.add_subcommand("catalog", "list, build and sweep the catalog of admissible biagrams");
    cat->require_subcommand(1);
    bool cat_json = false;
    auto* cat_list = cat->add_subcommand("list", "list family ids");
    cat_list->add_flag("--json", cat_json, "JSON output");
    cat_list->callback([&] { rc = run_catalog_list(cat_json); });

    Source cb_src;
    std::string cb_out;
    auto* cat_build = cat->add_subcommand("build", "build one family member as JSON");
    cb_src.add(cat_build);
    cat_build->add_option("--out", cb_out, "output file (default stdout)");
    cat_build->add_flag("--json", cat_json, "JSON output (the default here)");
    cat_build->callback([&] { rc = run_catalog_build(cb_src, cb_out); });

    int sw_n = 5, sw_m = 3, sw_rank = 0, sw_trials = 20;
    std::uint64_t sw_seed = 1;
    std::string sw_csv;
    bool sw_json = false;
    auto add_sweep = [&](CLI::App* c) {
        c->add_option("--max-n", sw_n, "largest n");
        c->add_option("--max-m", sw_m, "largest m");
        c->add_option("--max-rank", sw_rank, "sweep members by total rank instead of (n, m)");
        c->add_option("--trials", sw_trials, "random labelings per member");
        c->add_option("--seed", sw_seed, "base seed");
        c->add_option("--csv", sw_csv, "CSV report path ('-' for stdout)");
        c->add_flag("--json", sw_json, "JSON output");
        c->callback([&] { rc = run_sweep(sw_n, sw_m, sw_rank, sw_trials, sw_seed, sw_csv, sw_json); });
    };
    add_sweep(cat->add_subcommand("sweep", "check every member up to the bounds"));
    add_sweep(app.add_subcommand("sweep", "check every catalog member up to the bounds"));

    // check
    Source ck_src;
    bool ck_json = false;
    auto* ck = app.add_subcommand("check", "admissibility, component types, recurrence");
    ck_src.add(ck);
    ck->add_flag("--json", ck_json, "JSON output");
    ck->callback([&] { rc = run_check(ck_src, ck_json); });

    // evolve
    Source ev_src;
    int ev_steps = 6;
    std::vector<std::string> ev_print;
    bool ev_json = false;
    auto* ev = app.add_subcommand("evolve", "exact T-system");
    ev_src.add(ev);
    ev->add_option("--steps", ev_steps, "last time step")->check(CLI::NonNegativeNumber);
    ev->add_option("--print", ev_print, "k,t pairs to print (1-based k)");
    ev->add_flag("--json", ev_json, "JSON output");
    ev->callback([&] { rc = run_evolve(ev_src, ev_steps, ev_print, ev_json); });

    // tropical
    Source tr_src;
    std::string tr_lambda, tr_format = "table";
    int tr_steps = 14;
    bool tr_json = false, tr_colors = false;
    auto* trc = app.add_subcommand("tropical", "tropical T-system from a labeling");
    tr_src.add(trc);
    trc->add_option("--lambda", tr_lambda, "labeling: p/q list or eK")->required();
    trc->add_option("--steps", tr_steps, "number of rows, t = 0..steps-1")->check(CLI::PositiveNumber);
    trc->add_option("--format", tr_format, "table, csv, md or json")
        ->check(CLI::IsMember({"table", "csv", "md", "json"}));
    trc->add_flag("--table", [&](std::int64_t) { tr_format = "table"; }, "same as --format table");
    trc->add_flag("--colors", tr_colors, "suffix each mutated value with G, D or = (tie)");
    trc->add_flag("--json", tr_json, "same as --format json");
    trc->callback([&] { rc = run_tropical(tr_src, tr_lambda, tr_steps, tr_json ? "json" : tr_format, tr_colors); });

    // period
    Source pe_src;
    std::string pe_mode = "exact", pe_lambda;
    int pe_max = 0;
    bool pe_json = false;
    auto* pe = app.add_subcommand("period", "smallest N with T(t + 2N) = T(t)");
    pe_src.add(pe);
    pe->add_option("--mode", pe_mode, "exact or tropical")->check(CLI::IsMember({"exact", "tropical"}));
    pe->add_option("--max-N", pe_max, "search bound (default h_gamma + h_delta + 2)");
    pe->add_option("--lambda", pe_lambda, "tropical mode: labeling (default: all basis labelings)");
    pe->add_flag("--json", pe_json, "JSON output");
    pe->callback([&] { rc = run_period(pe_src, pe_mode, pe_max, pe_lambda, pe_json); });

    // fold
    Source fo_src;
    std::string fo_perm, fo_out;
    bool fo_json = false;
    auto* fo = app.add_subcommand("fold", "fold along a bicolored automorphism");
    fo_src.add(fo);
    fo->add_option("--perm", fo_perm, "image of each vertex, 1-based, e.g. \"1 3 2\"")->required();
    fo->add_option("--out", fo_out, "output file (default stdout)");
    fo->add_flag("--json", fo_json, "JSON output (the default here)");
    fo->callback([&] { rc = run_fold(fo_src, fo_perm, fo_out, fo_json); });

    // flip
    Source fl_src;
    std::string fl_out;
    bool fl_json = false;
    auto* fl = app.add_subcommand("flip", "transpose both matrices");
    fl_src.add(fl);
    fl->add_option("--out", fl_out, "output file (default stdout)");
    fl->add_flag("--json", fl_json, "JSON output (the default here)");
    fl->callback([&] { rc = run_flip(fl_src, fl_out); });

    // wcell
    Source wc_src;
    std::string wc_seed;
    int wc_p = 0, wc_q = 0, wc_vertex = 1;
    bool wc_verify = false, wc_json = false;
    auto* wc = app.add_subcommand("wcell", "product W-graph cell and Hecke relations");
    wc_src.add(wc);
    wc->add_option("--seed", wc_seed, "tau of the seed vertex, e.g. 1,3");
    wc->add_option("--seed-vertex", wc_vertex, "seed vertex (1-based)")->check(CLI::PositiveNumber);
    wc->add_option("--p", wc_p, "braid length for T1 T2 (default h_gamma)");
    wc->add_option("--q", wc_q, "braid length for T3 T4 (default h_delta)");
    wc->add_flag("--verify", wc_verify, "check quadratic, commutation and braid relations");
    wc->add_flag("--json", wc_json, "JSON output");
    wc->callback([&] { rc = run_wcell(wc_src, wc_seed, wc_p, wc_q, wc_vertex, wc_verify, wc_json); });

    // conjecture
    Source cj_src;
    int cj_trials = 20;
    std::uint64_t cj_seed = 1;
    std::string cj_out;
    bool cj_csv = false, cj_json = false;
    auto* cj = app.add_subcommand("conjecture", "mutation color counts for seeded random labelings");
    cj_src.add(cj);
    cj->add_option("--trials", cj_trials, "number of labelings")->check(CLI::PositiveNumber);
    cj->add_option("--seed", cj_seed, "seed");
    cj->add_flag("--csv", cj_csv, "CSV output");
    cj->add_option("--out", cj_out, "output file for --csv (default stdout)");
    cj->add_flag("--json", cj_json, "JSON output");
    cj->callback([&] { rc = run_conjecture(cj_src, cj_trials, cj_seed, cj_csv, cj_out, cj_json); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const TooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const NonDynkinComponent& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const MixedCoxeterNumbers& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}

#include "suite.hpp"

#include <dualramsey/json_io.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace dualramsey;

namespace {

// Malformed input: exit 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computed assertion did not hold: exit 1.
struct AssertionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    bool json = false;
    std::string out;
    unsigned cap = default_depth_cap();
};

Globals g;

void emit(const std::string& text)
{
    if (g.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') {
            std::cout << '\n';
        }
        return;
    }
    std::ofstream os(g.out, std::ios::binary);
    if (!os) {
        throw InputError(g.out + ": cannot write");
    }
    os << text;
    if (!text.empty() && text.back() != '\n') {
        os << '\n';
    }
}

void emit_json(const Json& j) { emit(j.dump(2)); }

Json load(const std::string& path)
{
    try {
        return load_json_file(path);
    } catch (const SchemaError& e) {
        throw InputError(path + ": " + e.what());
    }
}

void flush_warnings(const LoadContext& ctx, const std::string& path)
{
    for (const auto& w : ctx.warnings) {
        std::cerr << "warning: " << path << ": " << w << "\n";
    }
}

template <class F>
auto parse_file(const std::string& path, F&& f)
{
    const Json j = load(path);
    LoadContext ctx;
    try {
        auto v = f(j, ctx);
        flush_warnings(ctx, path);
        return v;
    } catch (const SchemaError& e) {
        throw InputError(path + "#" + e.where() + ": " + std::string(e.what()).substr(e.where().size() + 2));
    }
}

Surjection read_surjection(const std::string& path)
{
    return parse_file(path, [](const Json& j, LoadContext& ctx) { return surjection_from_json(j, ctx); });
}

std::pair<unsigned, std::vector<Point>> read_tuple(const std::string& path)
{
    return parse_file(path, [](const Json& j, LoadContext& ctx) {
        unsigned b = 2;
        auto t = tuple_from_json(j, ctx, b);
        return std::make_pair(b, std::move(t));
    });
}

QCopy read_qcopy(const std::string& path)
{
    return parse_file(path, [](const Json& j, LoadContext& ctx) { return qcopy_from_json(j, ctx, g.cap); });
}

ColoringSpec read_coloring(const std::string& path)
{
    return parse_file(path, [](const Json& j, LoadContext& ctx) { return coloring_from_json(j, ctx); });
}

std::string tuple_line(const std::vector<Point>& t)
{
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
        s += (i ? " " : "") + t[i].to_string();
    }
    return s;
}

TreeType type_from_arg(const std::string& arg, unsigned l)
{
    if (!arg.empty() && arg.find_first_not_of("0123456789") == std::string::npos) {
        if (l == 0) {
            throw InputError("--type: a numeric type id needs --l");
        }
        const BigInt rank(arg);
        if (rank >= tangent_number(l)) {
            throw InputError("--type: rank " + arg + " out of range for l = " + std::to_string(l));
        }
        return TreeType::unrank(l, rank);
    }
    try {
        return TreeType::parse(arg);
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("--type: ") + e.what());
    }
}

std::string verified_mark(bool ok) { return ok ? "yes" : "NO"; }

void table_experiment(const ExperimentReport& r)
{
    std::ostringstream os;
    os << "b=" << r.b << " k=" << r.k << " l=" << r.l << " t=" << r.t << " cap=" << r.cap << "\n";
    os << "color  depth  verified  tuple\n";
    for (const auto& w : r.colors) {
        os << std::setw(5) << w.color << "  " << std::setw(5) << (w.found ? std::to_string(w.depth) : "-") << "  "
           << std::setw(8) << verified_mark(w.verified) << "  " << tuple_line(w.tuple) << "\n";
    }
    os << "realized " << r.realized() << "/" << r.t << "\n";
    emit(os.str());
}

void table_oscillation(const OscillationReport& r)
{
    std::ostringstream os;
    os << "regime " << r.regime << (r.guaranteed ? " (guaranteed)" : " (heuristic bound)") << "\n";
    os << "b=" << r.b << " eps=" << r.eps << " k=" << r.params.k << " l=" << r.params.l << " t=" << r.params.t
       << "\n";
    os << "h: " << r.h_label << "\n";
    os << "|B| = " << r.colors.size() << "\n";
    for (const auto& w : r.witnesses) {
        os << "  color " << w.color << ": " << tuple_line(w.tuple) << "\n";
    }
    if (r.regime != "exact") {
        os << "candidates " << r.candidates << ", tuples examined " << r.tuples_examined << "\n";
    }
    emit(os.str());
}

std::vector<int> parse_only(const std::string& s)
{
    std::vector<int> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        const auto dash = part.find('-');
        try {
            if (dash == std::string::npos) {
                out.push_back(std::stoi(part));
            } else {
                for (int i = std::stoi(part.substr(0, dash)); i <= std::stoi(part.substr(dash + 1)); ++i) {
                    out.push_back(i);
                }
            }
        } catch (const std::logic_error&) {
            throw InputError("--only: cannot read \"" + part + "\"");
        }
    }
    for (int id : out) {
        if (id < 1 || id > static_cast<int>(verify::criteria().size())) {
            throw InputError("--only: no criterion " + std::to_string(id));
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Filterings, surjections of the Cantor space and their Ramsey colorings"};
    app.set_help_flag("--help", "print help and exit");
    app.require_subcommand(1);
    app.add_flag("--json", g.json, "JSON output where a table is the default");
    app.add_option("-o,--out", g.out, "write output to a file");
    app.add_option("--cap", g.cap, "depth cap (default RAMSEY_DEPTH_CAP or 64)")->check(CLI::Range(1u, 4096u));

    std::function<void()> action;

    unsigned k_arg = 1;
    auto* tangent = app.add_subcommand("tangent", "odd tangent number t_k");
    tangent->add_option("k", k_arg)->required()->check(CLI::Range(1u, 100000u));
    tangent->callback([&] { action = [&] { emit(tangent_number(k_arg).str()); }; });

    unsigned l_arg = 0;
    std::string types_mode;
    auto* types = app.add_subcommand("types", "similarity types");
    types->add_option("mode", types_mode)->required()->check(CLI::IsMember({"enum", "count"}));
    types->add_option("--l", l_arg)->required()->check(CLI::Range(1u, 6u));
    types->callback([&] {
        action = [&] {
            if (types_mode == "count") {
                emit(std::to_string(enumerate_types(l_arg).size()));
                return;
            }
            const auto all = enumerate_types(l_arg);
            if (g.json) {
                Json a = Json::array();
                for (std::size_t i = 0; i < all.size(); ++i) {
                    a.push_back(Json{{"rank", i}, {"type", all[i].encoding()}});
                }
                emit_json(Json{{"l", l_arg}, {"count", all.size()}, {"types", a}});
                return;
            }
            std::ostringstream os;
            for (std::size_t i = 0; i < all.size(); ++i) {
                os << i << "\t" << all[i].encoding() << "\n";
            }
            emit(os.str());
        };
    });

    std::string file1, file2;
    auto* type_of = app.add_subcommand("type-of", "type and canonical color of a tuple");
    type_of->add_option("tuple", file1)->required();
    type_of->callback([&] {
        action = [&] {
            const auto [b, t] = read_tuple(file1);
            (void)b;
            Json j{{"l", t.size()}};
            if (is_strongly_diagonal(t)) {
                const TreeType ty = similarity_type(t);
                j["strongly_diagonal"] = true;
                j["type"] = ty.encoding();
                j["rank"] = ty.rank().str();
            } else {
                j["strongly_diagonal"] = false;
                j["rank"] = "0";
            }
            if (g.json) {
                emit_json(j);
            } else if (j["strongly_diagonal"].get<bool>()) {
                emit(j["type"].get<std::string>() + "  rank " + j["rank"].get<std::string>());
            } else {
                emit("not strongly diagonal  color 0");
            }
        };
    });

    std::string h_file, type_arg;
    auto* search = app.add_subcommand("search-type", "a tuple of a given type in Y_h");
    search->add_option("--h", h_file)->required();
    search->add_option("--type", type_arg, "rank (with --l) or encoding")->required();
    search->add_option("--l", l_arg)->check(CLI::Range(1u, 64u));
    search->callback([&] {
        action = [&] {
            const Surjection h = read_surjection(h_file);
            const TreeType ty = type_from_arg(type_arg, l_arg);
            auto hit = search_tuple_of_type(h, ty, g.cap);
            if (!hit) {
                throw AssertionFailure("no tuple of type " + ty.encoding() + " in Y_h to depth " +
                                       std::to_string(g.cap));
            }
            if (g.json) {
                Json j = tuple_to_json(h.base(), hit->tuple);
                j["type"] = ty.encoding();
                j["depth"] = hit->depth;
                emit_json(j);
            } else {
                emit(tuple_line(hit->tuple) + "  (depth " + std::to_string(hit->depth) + ")");
            }
        };
    });

    std::string x_arg;
    unsigned digits = 16;
    auto* eval = app.add_subcommand("eval", "digits of f(x)");
    eval->add_option("f", file1)->required();
    eval->add_option("--x", x_arg, "point as stem(tail), e.g. 01(1)")->required();
    eval->add_option("--digits", digits)->check(CLI::Range(1u, 4096u));
    eval->callback([&] {
        action = [&] {
            const Surjection f = read_surjection(file1);
            Point x;
            try {
                x = Point::parse(f.base(), x_arg);
            } catch (const std::invalid_argument& e) {
                throw InputError(std::string("--x: ") + e.what());
            }
            const EvalResult r = evaluate(f, x, digits);
            if (g.json) {
                Json j{{"x", to_json(x)}, {"digits", word_to_string(r.digits)}};
                j["exact"] = r.exact ? to_json(*r.exact) : Json(nullptr);
                emit_json(j);
            } else {
                emit(word_to_string(r.digits) + (r.exact ? "  = " + r.exact->to_string() : std::string("...")));
            }
        };
    });

    int materialize = -1;
    auto* comp = app.add_subcommand("compose", "f o h as a chain, or materialized");
    comp->add_option("f", file1)->required();
    comp->add_option("h", file2)->required();
    comp->add_option("--depth", materialize, "materialize the filtering to this depth")->check(CLI::Range(0, 64));
    comp->callback([&] {
        action = [&] {
            const Surjection f = read_surjection(file1);
            const Surjection h = read_surjection(file2);
            if (f.base() != h.base()) {
                throw InputError(file2 + "#/b: base differs from " + file1);
            }
            Surjection c = compose(f, h);
            if (materialize >= 0) {
                c = Surjection::from_filtering(to_filtering(c, static_cast<unsigned>(materialize)));
            }
            emit_json(to_json(c));
        };
    });

    auto* dist = app.add_subcommand("dist", "rho_infinity(f, g)");
    dist->add_option("f", file1)->required();
    dist->add_option("g", file2)->required();
    dist->callback([&] {
        action = [&] {
            const Surjection f = read_surjection(file1);
            const Surjection s = read_surjection(file2);
            if (f.base() != s.base()) {
                throw InputError(file2 + "#/b: base differs from " + file1);
            }
            const DistanceResult d = distance(f, s, g.cap);
            if (g.json) {
                emit_json(to_json(d));
            } else {
                emit(d.to_string());
            }
        };
    });

    std::string g_file, tuple_file;
    unsigned factor_depth = 6;
    auto* factor = app.add_subcommand("factor", "f with g = f o h, or with a given fingerprint of f o h");
    factor->add_option("--h", h_file)->required();
    auto* g_opt = factor->add_option("--g", g_file);
    auto* t_opt = factor->add_option("--tuple", tuple_file);
    g_opt->excludes(t_opt);
    factor->add_option("--depth", factor_depth)->check(CLI::Range(0u, 64u));
    factor->callback([&] {
        action = [&] {
            const Surjection h = read_surjection(h_file);
            Surjection f = Surjection::identity(h.base());
            try {
                if (!g_file.empty()) {
                    const Surjection gs = read_surjection(g_file);
                    if (gs.base() != h.base()) {
                        throw InputError(g_file + "#/b: base differs from " + h_file);
                    }
                    f = factor_through(gs, h, factor_depth, g.cap);
                } else if (!tuple_file.empty()) {
                    const auto [b, t] = read_tuple(tuple_file);
                    if (b != h.base()) {
                        throw InputError(tuple_file + "#/b: base differs from " + h_file);
                    }
                    f = tuple_to_factor(h, t, g.cap);
                } else {
                    throw InputError("factor: give --g or --tuple");
                }
            } catch (const FactorError& e) {
                throw AssertionFailure(std::string(e.what()) + " (witness " + e.witness().to_string() +
                                       (e.undecided() ? ", undecided at cap)" : ")"));
            }
            emit_json(to_json(f));
        };
    });

    unsigned k_opt = 1;
    auto* bounds = app.add_subcommand("boundaries", "depth-k boundary tuple");
    bounds->add_option("f", file1)->required();
    bounds->add_option("--k", k_opt)->required()->check(CLI::Range(0u, 20u));
    bounds->callback([&] {
        action = [&] {
            const Surjection f = read_surjection(file1);
            const auto t = f.boundary_tuple(k_opt);
            if (g.json) {
                emit_json(tuple_to_json(f.base(), t));
            } else {
                emit(tuple_line(t));
            }
        };
    });

    std::string f_file;
    auto* cdev = app.add_subcommand("color-devlin", "canonical color of a tuple or of the fingerprint of f");
    cdev->add_option("tuple", file1);
    cdev->add_option("--f", f_file);
    cdev->add_option("--k", k_opt)->check(CLI::Range(1u, 20u));
    cdev->callback([&] {
        action = [&] {
            BigInt color;
            if (!f_file.empty()) {
                color = lower_bound_coloring(read_surjection(f_file), k_opt);
            } else if (!file1.empty()) {
                color = canonical_coloring(read_tuple(file1).second);
            } else {
                throw InputError("color-devlin: give a tuple file or --f");
            }
            emit(color.str());
        };
    });

    auto* comega = app.add_subcommand("color-omega", "omega-coloring of a Q-copy");
    comega->add_option("Y", file1)->required();
    comega->callback([&] {
        action = [&] {
            const QCopy y = read_qcopy(file1);
            emit(std::to_string(omega_coloring(y, g.cap)));
        };
    });

    unsigned target = 0;
    auto* womega = app.add_subcommand("witness-omega", "Z inside Y with a given omega-color");
    womega->add_option("Y", file1)->required();
    womega->add_option("--target", target)->required()->check(CLI::Range(0u, 4096u));
    womega->callback([&] {
        action = [&] {
            const QCopy y = read_qcopy(file1);
            OmegaWitness w = [&] {
                try {
                    return build_witness(y, target, g.cap);
                } catch (const std::runtime_error& e) {
                    throw AssertionFailure(e.what());
                }
            }();
            Json j{{"z", to_json(w.z)},
                   {"color", omega_coloring(w.z, g.cap)},
                   {"t0", word_to_string(w.t0)},
                   {"s0", word_to_string(w.s0)},
                   {"n", w.n},
                   {"m", w.m}};
            emit_json(j);
        };
    });

    unsigned k_exp = 2;
    auto* realize = app.add_subcommand("realize-all", "witness every color of the lower-bound coloring in Y_h");
    realize->add_option("--h", h_file)->required();
    realize->add_option("--k", k_exp)->check(CLI::Range(1u, 8u));
    realize->callback([&] {
        action = [&] {
            const Surjection h = read_surjection(h_file);
            const ExperimentReport r = realize_all_colors(h, k_exp, g.cap);
            if (g.json) {
                emit_json(to_json(r));
            } else {
                table_experiment(r);
            }
            if (!r.all_verified()) {
                throw AssertionFailure("not every color was realized and verified");
            }
        };
    });

    std::string coloring_file;
    double eps = 0.3;
    unsigned budget = 8;
    std::uint64_t seed = 42;
    auto* osc = app.add_subcommand("oscillation", "least color set B on a cube {f o h}");
    osc->add_option("--coloring", coloring_file)->required();
    osc->add_option("--eps", eps)->check(CLI::Range(1e-9, 1.0));
    osc->add_option("--budget", budget);
    osc->add_option("--seed", seed);
    osc->callback([&] {
        action = [&] {
            const ColoringSpec c = read_coloring(coloring_file);
            const OscillationReport r = [&] {
                try {
                    return oscillation_search(c, 2, eps, budget, seed, std::min(g.cap, 20u));
                } catch (const std::invalid_argument& e) {
                    throw InputError(coloring_file + ": " + e.what());
                }
            }();
            if (g.json) {
                emit_json(to_json(r));
            } else {
                table_oscillation(r);
            }
        };
    });

    std::string only_arg, replay_file, dump_dir;
    auto* ver = app.add_subcommand("verify", "run the property suite");
    ver->add_option("--seed", seed);
    ver->add_option("--only", only_arg, "criteria, e.g. 1,3-5");
    ver->add_option("--replay", replay_file, "re-run one counterexample dump");
    ver->add_option("--dump-dir", dump_dir, "where counterexample dumps go (default: current directory)");
    ver->callback([&] {
        action = [&] {
            if (!replay_file.empty()) {
                const Json dump = load(replay_file);
                std::optional<std::string> failure;
                try {
                    failure = verify::replay(dump);
                } catch (const SchemaError& e) {
                    throw InputError(replay_file + "#" + e.where() + ": " +
                                     std::string(e.what()).substr(e.where().size() + 2));
                }
                if (failure) {
                    throw AssertionFailure("criterion " + std::to_string(dump["criterion"].get<int>()) +
                                           " fails again: " + *failure);
                }
                emit("criterion " + std::to_string(dump["criterion"].get<int>()) + " passes on this case");
                return;
            }
            const auto results = verify::run_suite(seed, parse_only(only_arg));
            const Json report = verify::report_json(seed, results);
            emit(g.json ? report.dump(2) : verify::report_table(results));
            bool ok = true;
            for (const auto& r : results) {
                if (r.passed()) {
                    continue;
                }
                ok = false;
                if (r.counterexample) {
                    const auto path = std::filesystem::path(dump_dir.empty() ? "." : dump_dir) /
                                      ("counterexample-" + std::to_string(r.id) + ".json");
                    std::ofstream os(path, std::ios::binary);
                    os << r.counterexample->dump(2) << "\n";
                    std::cerr << "criterion " << r.id << ": counterexample written to " << path.string() << "\n";
                }
            }
            if (!ok) {
                throw AssertionFailure("some criteria failed");
            }
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    try {
        action();
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const AssertionFailure& e) {
        std::cerr << "assertion failed: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "assertion failed: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

// Copyright 2026 the gfmix authors
// SPDX-License-Identifier: Apache-2.0

#include "app.hpp"

#include "gfmix/accessibility.hpp"
#include "gfmix/defun.hpp"
#include "gfmix/dist_spec.hpp"
#include "gfmix/errors.hpp"
#include "gfmix/mixtures.hpp"
#include "gfmix/transforms.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace gfmix::cli {

namespace {

struct Options {
    std::string dist;
    std::string kernel;
    std::string mixing;
    std::string grid;
    std::string name;
    std::string mapping_file;
    std::string what = "cdf";
    std::string out;
    std::string config;
    std::vector<std::string> fixed;
    double tol = 1e-10;
    double a = std::nan("");
    double b = std::nan("");
    std::uint64_t seed = 0;
    std::uint64_t n = 1000;
};

void apply_config_file(Options* o) {
    if (o->config.empty()) return;
    std::ifstream in(o->config);
    if (!in) throw std::invalid_argument("config: cannot open '" + o->config + "'");
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "dist") o->dist = value;
        else if (key == "kernel") o->kernel = value;
        else if (key == "mixing") o->mixing = value;
        else if (key == "grid") o->grid = value;
        else if (key == "name") o->name = value;
        else if (key == "mapping-file") o->mapping_file = value;
        else if (key == "what") o->what = value;
        else if (key == "out") o->out = value;
        else if (key == "fixed") o->fixed.push_back(value);
        else if (key == "tol") o->tol = std::stod(value);
        else if (key == "a") o->a = std::stod(value);
        else if (key == "b") o->b = std::stod(value);
        else if (key == "seed") o->seed = std::stoull(value);
        else if (key == "n") o->n = std::stoull(value);
        else throw std::invalid_argument("config: unknown key '" + key + "'");
    }
}

std::string require(const std::string& value, const char* flag) {
    if (value.empty())
        throw std::invalid_argument(std::string("missing required option ") + flag);
    return value;
}

class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::invalid_argument("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

private:
    std::ofstream file_;
    std::ostream& fallback_;
};

void emit_rows(std::ostream& os, const std::string& header,
               const std::vector<std::vector<double>>& rows) {
    os << header << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << format12(row[i]);
        os << "\n";
    }
}

QuadratureConfig quad_config(double tol) {
    QuadratureConfig cfg;
    cfg.abs_tol = tol;
    cfg.rel_tol = tol;
    return cfg;
}

int run_point_eval(const Options& o, const std::string& op, std::ostream& outstream) {
    const AnyDistribution d = parse_distribution(require(o.dist, "--dist"));
    const Grid grid = Grid::parse(require(o.grid, "--grid"));
    std::vector<std::vector<double>> rows;
    rows.reserve(grid.count());
    std::string header;
    if (op == "pdf") {
        header = "x,pdf";
        for (std::size_t i = 0; i < grid.count(); ++i)
            rows.push_back({grid.at(i), pdf(d, grid.at(i))});
    } else if (op == "cdf") {
        header = "x,cdf";
        for (std::size_t i = 0; i < grid.count(); ++i)
            rows.push_back({grid.at(i), cdf(d, grid.at(i))});
    } else if (op == "mgf") {
        header = "s,mgf";
        for (std::size_t i = 0; i < grid.count(); ++i)
            rows.push_back({grid.at(i), mgf(d, grid.at(i))});
    } else { // cf
        header = "omega,cf_re,cf_im";
        for (std::size_t i = 0; i < grid.count(); ++i) {
            const auto v = cf(d, grid.at(i));
            rows.push_back({grid.at(i), v.real(), v.imag()});
        }
    }
    emit_rows(outstream, header, rows);
    return 0;
}

int run_invert(const Options& o, std::ostream& outstream) {
    const AnyDistribution d = parse_distribution(require(o.dist, "--dist"));
    const Grid grid = Grid::parse(require(o.grid, "--grid"));
    const auto cf = cf_object(d);
    const auto cfg = quad_config(std::min(o.tol, 1e-8));
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < grid.count(); ++i)
        rows.push_back({grid.at(i), transforms::gil_pelaez_pdf(cf, grid.at(i), cfg)});
    emit_rows(outstream, "y,pdf", rows);
    return 0;
}

int run_figure1(const Options& o, std::ostream& outstream) {
    if (std::isnan(o.a) || std::isnan(o.b))
        throw std::invalid_argument("figure1 requires --a and --b");
    const auto d = defun::DifferentiatedErrorFunction::make(o.a, o.b);
    const Grid grid = o.grid.empty() ? Grid{-10.0, 10.0, 0.1} : Grid::parse(o.grid);
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < grid.count(); ++i)
        rows.push_back({grid.at(i), defun::pdf(d, grid.at(i))});
    emit_rows(outstream, "y,f", rows);
    return 0;
}

int run_sample(const Options& o, std::ostream& outstream) {
    const AnyDistribution d = parse_distribution(require(o.dist, "--dist"));
    std::vector<double> xs;
    if (!o.mixing.empty()) {
        const auto mm = mixtures::MixtureModel::make(d, mixtures::MixingDensity::parse(o.mixing));
        xs = mixtures::sample_mixture(mm, o.n, o.seed);
    } else {
        xs = sample(d, o.n, o.seed);
    }
    outstream << "value\n";
    for (double x : xs) outstream << format12(x) << "\n";
    return 0;
}

int run_mix(const Options& o, std::ostream& outstream) {
    const AnyDistribution kernel = parse_distribution(require(o.kernel, "--kernel"));
    const auto mm =
        mixtures::MixtureModel::make(kernel, mixtures::MixingDensity::parse(
                                                 require(o.mixing, "--mixing")));
    const Grid grid = Grid::parse(require(o.grid, "--grid"));
    const auto cfg = quad_config(o.tol);
    std::vector<std::vector<double>> rows;
    std::string header;
    if (o.what == "cdf") {
        header = "x,cdf";
        for (std::size_t i = 0; i < grid.count(); ++i)
            rows.push_back({grid.at(i), mixtures::mixture_cdf(mm, grid.at(i), cfg)});
    } else if (o.what == "mgf") {
        header = "s,mgf";
        for (std::size_t i = 0; i < grid.count(); ++i)
            rows.push_back({grid.at(i), mixtures::mixture_mgf(mm, grid.at(i), cfg)});
    } else {
        throw std::invalid_argument("mix: --what must be cdf or mgf, got '" + o.what + "'");
    }
    emit_rows(outstream, header, rows);
    return 0;
}

int run_verify_mapping(const Options& o, std::ostream& outstream) {
    namespace acc = accessibility;
    acc::AccessibilityMapping mapping = [&] {
        if (!o.mapping_file.empty()) return acc::load_mapping_config(o.mapping_file);
        std::map<std::string, double> fixed;
        for (const auto& kv : o.fixed) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("verify-mapping: --fixed expects key=value, got '" +
                                            kv + "'");
            fixed[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
        }
        return acc::make_builtin(require(o.name, "--name"), fixed);
    }();

    const auto rep = acc::verify_definition1(mapping, o.tol);
    const auto rep_swapped = acc::verify_definition1(acc::swapped(mapping), o.tol);
    outstream << rep.to_string() << "\n" << rep_swapped.to_string();
    outstream << "verdict: "
              << (mapping.verdict == acc::TransportVerdict::Identifiable
                      ? "transports identifiability"
                      : "transports unidentifiability")
              << " -- " << mapping.verdict_citation << "\n";
    return rep.passed && rep_swapped.passed ? 0 : 1;
}

} // namespace

Grid Grid::parse(const std::string& text) {
    Grid g;
    double vals[3];
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
        const auto colon = text.find(':', pos);
        const std::string piece = colon == std::string::npos ? text.substr(pos)
                                                             : text.substr(pos, colon - pos);
        if (piece.empty() || (i < 2 && colon == std::string::npos) ||
            (i == 2 && colon != std::string::npos))
            throw std::invalid_argument("grid: expected start:stop:step, got '" + text + "'");
        try {
            std::size_t used = 0;
            vals[i] = std::stod(piece, &used);
            if (used != piece.size()) throw std::invalid_argument(piece);
        } catch (const std::exception&) {
            throw std::invalid_argument("grid: bad number '" + piece + "' in '" + text + "'");
        }
        pos = colon + 1;
    }
    g.start = vals[0];
    g.stop = vals[1];
    g.step = vals[2];
    if (!(g.step > 0.0)) throw std::invalid_argument("grid: step must be > 0");
    if (g.start > g.stop) throw std::invalid_argument("grid: start must be <= stop");
    return g;
}

std::size_t Grid::count() const {
    return static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
}

double Grid::at(std::size_t i) const {
    const double v = start + static_cast<double>(i) * step;
    return v > stop ? stop : v;
}

std::string format12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"kernel-distribution transforms, accessibility mappings and continuous "
                 "mixtures"};
    app.require_subcommand(1);

    std::map<std::string, CLI::App*> subs;
    auto add_sub = [&](const char* name, const char* desc) {
        CLI::App* sc = app.add_subcommand(name, desc);
        sc->add_option("--out", o.out, "write output to this file instead of stdout");
        sc->add_option("--config", o.config, "key=value file overriding flags");
        sc->add_option("--tol", o.tol, "tolerance for quadrature/verification");
        subs[name] = sc;
        return sc;
    };

    for (const char* op : {"pdf", "cdf", "mgf", "cf"}) {
        auto* sc = add_sub(op, "evaluate the distribution over a grid");
        sc->add_option("--dist", o.dist, "distribution spec, e.g. gamma:r=2,theta=1");
        sc->add_option("--grid", o.grid, "start:stop:step (inclusive)");
    }
    {
        auto* sc = add_sub("invert", "recover a density from its cf via Gil-Pelaez inversion");
        sc->add_option("--dist", o.dist, "distribution whose cf is inverted");
        sc->add_option("--grid", o.grid, "y grid start:stop:step");
    }
    {
        auto* sc = add_sub("verify-mapping", "check the MGF identity of a mapping pair");
        sc->add_option("--name", o.name, "registered mapping name");
        sc->add_option("--mapping-file", o.mapping_file, "expression-based mapping config");
        sc->add_option("--fixed", o.fixed, "fixed-parameter override, e.g. kappa=0.5");
    }
    {
        auto* sc = add_sub("mix", "mixture cdf or mgf by quadrature over a mixing density");
        sc->add_option("--kernel", o.kernel, "kernel spec with free=, e.g. "
                                             "poisson:lambda=1,free=lambda");
        sc->add_option("--mixing", o.mixing, "mixing spec, e.g. gamma:r=2,theta=1");
        sc->add_option("--what", o.what, "cdf or mgf");
        sc->add_option("--grid", o.grid, "evaluation grid");
    }
    {
        auto* sc = add_sub("sample", "seeded sampling of a kernel or mixture");
        sc->add_option("--dist", o.dist, "distribution (kernel spec; needs free= with --mixing)");
        sc->add_option("--mixing", o.mixing, "optional mixing spec for two-stage sampling");
        sc->add_option("--n", o.n, "number of draws");
        sc->add_option("--seed", o.seed, "rng seed");
    }
    {
        auto* sc = add_sub("figure1", "emit pdf plot data for defun:a=...,b=...");
        sc->add_option("--a", o.a, "lower transform parameter (a >= 0)");
        sc->add_option("--b", o.b, "upper transform parameter (b > a)");
        sc->add_option("--grid", o.grid, "y grid, default -10:10:0.1");
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        apply_config_file(&o);
        if (!(o.tol > 0.0)) throw std::invalid_argument("tol must be > 0");
        Sink sink(o.out, out);
        for (const char* op : {"pdf", "cdf", "mgf", "cf"})
            if (subs[op]->parsed()) return run_point_eval(o, op, sink.stream());
        if (subs["invert"]->parsed()) return run_invert(o, sink.stream());
        if (subs["verify-mapping"]->parsed()) return run_verify_mapping(o, sink.stream());
        if (subs["mix"]->parsed()) return run_mix(o, sink.stream());
        if (subs["sample"]->parsed()) return run_sample(o, sink.stream());
        if (subs["figure1"]->parsed()) return run_figure1(o, sink.stream());
        err << "error: no subcommand\n";
        return 2;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::range_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace gfmix::cli

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "treach/errors.hpp"
#include "treach/io.hpp"

namespace {

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw treach::ParseError("cannot write '" + out_path + "'");
    out << text;
}

void print_trace(const treach::Trace& trace) {
    for (const auto& e : trace)
        std::cerr << "[trace] " << e.stage << ": " << e.generators << " generators\n";
}

int run(int argc, char** argv) {
    CLI::App app{"Backward reachable sets for max-plus linear systems with disturbances"};
    app.require_subcommand(1);

    std::string problem_path, out_path;
    bool trace_flag = false;
    std::vector<std::string> box;
    std::size_t res = 10;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("problem", problem_path, "problem file (JSON)")->required();
        cmd->add_option("--out", out_path, "output file (default: stdout)");
        cmd->add_flag("--trace", trace_flag, "print per-stage generator counts to stderr");
    };

    CLI::App* cmd_ainv = app.add_subcommand("ainv", "preimage of the target under A");
    CLI::App* cmd_gamma = app.add_subcommand("gamma", "existential preimage over the control set");
    CLI::App* cmd_phi = app.add_subcommand("phi", "universal preimage over the disturbance set");
    CLI::App* cmd_upsilon = app.add_subcommand("upsilon", "one-step backward reachable set");
    CLI::App* cmd_sample =
        app.add_subcommand("sample", "membership grid of the backward reachable set as CSV");
    for (auto* c : {cmd_ainv, cmd_gamma, cmd_phi, cmd_upsilon, cmd_sample}) add_common(c);
    cmd_sample->add_option("--box", box, "x1min x1max x2min x2max")->expected(4)->required();
    cmd_sample->add_option("--res", res, "grid points per axis")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    treach::Problem p = treach::parse_problem(problem_path);
    treach::Result result;
    treach::Trace* trace = trace_flag ? &result.trace : nullptr;

    if (cmd_ainv->parsed()) {
        result.set = treach::a_inverse(p.model.A, treach::target_to_cone(p.target), trace);
    } else if (cmd_gamma->parsed()) {
        result.set =
            treach::gamma(p.model.B, p.model.U, treach::target_to_cone(p.target), trace);
    } else if (cmd_phi->parsed()) {
        treach::Polyhedron w_image = treach::linear_image(p.model.C, p.model.W);
        if (trace)
            trace->push_back(
                {"linear_image(W)", w_image.span_gens.size() + w_image.conv_gens.size()});
        result.set = treach::phi(w_image, p.target, trace);
    } else {
        result.set = treach::upsilon(p.model, p.target, trace);
    }

    if (trace_flag) print_trace(result.trace);

    if (cmd_sample->parsed()) {
        treach::Scalar bounds[4];
        for (int i = 0; i < 4; ++i) bounds[i] = treach::parse_scalar(box[i]);
        write_output(
            treach::sample_csv(result.set, bounds[0], bounds[1], bounds[2], bounds[3], res),
            out_path);
    } else {
        write_output(treach::serialize_result(result), out_path);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const treach::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const treach::DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const treach::IndexOutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

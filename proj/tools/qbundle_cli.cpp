#include "qbundle/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

int emit(const nlohmann::ordered_json& j, const std::string& out) {
    const std::string text = j.dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot write '" << out << "'\n";
        return 2;
    }
    f << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of covariant calculi and connections on quantum flag bundles"};
    app.require_subcommand(1);

    std::string config_path, out, suite;
    long long seed = -1;
    std::vector<std::string> overrides;
    app.add_option("--config", config_path, "flat key = value configuration file");
    app.add_option("--out", out, "write the JSON report here instead of stdout");
    app.add_option("--seed", seed, "random seed for sampled checks");
    app.add_option("--suite", suite, "run a single suite (verify only)");
    app.add_option("--set", overrides, "override a configuration key, e.g. --set level=3");

    auto* verify = app.add_subcommand("verify", "run the verification suites");
    auto* dims = app.add_subcommand("dims", "form dimensions, braiding spectrum and restricted windows");
    auto* idem = app.add_subcommand("idempotent", "the bundle idempotent matrix and its rank");
    auto* conn = app.add_subcommand("connection", "partial, nabla0 and curvature on the generators");
    auto* haar = app.add_subcommand("haar", "Haar norms at the sample points");
    for (auto* s : {verify, dims, idem, conn, haar}) s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    qb::RunConfig cfg;
    try {
        if (!config_path.empty()) cfg = qb::load_config(config_path);
        for (const auto& kv : overrides) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) throw qb::ConfigError("--set expects key=value, got '" + kv + "'");
            cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
        }
        if (seed >= 0) cfg.seed = static_cast<std::uint64_t>(seed);
        if (app.count("--seed") && seed < 0) throw qb::ConfigError("seed: must be non-negative");
        if (!suite.empty()) cfg.suite = suite;
        cfg.validate();
    } catch (const qb::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (verify->parsed()) {
            const qb::Report r = qb::verify(cfg);
            const int w = emit(r.to_json(), out);
            return w != 0 ? w : r.exit_code();
        }
        nlohmann::ordered_json j;
        if (dims->parsed()) j = qb::dims_table(cfg);
        if (idem->parsed()) j = qb::idempotent_dump(cfg);
        if (conn->parsed()) j = qb::connection_dump(cfg);
        if (haar->parsed()) j = qb::haar_table(cfg);
        const int w = emit(j, out);
        return w != 0 ? w : (j.value("pass", false) ? 0 : 1);
    } catch (const qb::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

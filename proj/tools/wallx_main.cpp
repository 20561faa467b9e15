// Command-line front end for the wallx engine. Talks to the core library
// exclusively through the C API in wallx/wallx.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "wallx/wallx.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitContract = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitInternal = 3;

struct EngineDeleter {
    void operator()(wallx_engine* e) const { wallx_engine_free(e); }
};
struct LatticeDeleter {
    void operator()(wallx_lattice* l) const { wallx_lattice_free(l); }
};
using EnginePtr = std::unique_ptr<wallx_engine, EngineDeleter>;
using LatticePtr = std::unique_ptr<wallx_lattice, LatticeDeleter>;

class OwnedString {
  public:
    ~OwnedString() { wallx_string_free(text_); }
    char** slot() { return &text_; }
    const char* get() const { return text_ ? text_ : ""; }

  private:
    char* text_ = nullptr;
};

bool read_file(const std::string& path, std::string& out, std::string& err) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        err = "cannot open " + path;
        return false;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

int write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n')
            std::cout << "\n";
        return kExitOk;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitBadInput;
    }
    out << text;
    if (text.empty() || text.back() != '\n')
        out << "\n";
    return kExitOk;
}

int finish(wallx_engine* engine, wallx_status status, const OwnedString& reply,
           const std::string& out_path) {
    if (status == WALLX_OK || status == WALLX_CONTRACT_VIOLATION) {
        // contract violations still produce a full report
        if (reply.get()[0] != '\0') {
            int w = write_output(out_path, reply.get());
            if (w != kExitOk)
                return w;
        }
        if (status == WALLX_CONTRACT_VIOLATION) {
            const char* msg = wallx_last_error(engine);
            if (msg[0] != '\0')
                std::cerr << "contract violation: " << msg << "\n";
            return kExitContract;
        }
        return kExitOk;
    }
    std::cerr << (status == WALLX_PARSE_ERROR ? "input error: "
                                              : "internal error: ")
              << wallx_last_error(engine) << "\n";
    return status == WALLX_PARSE_ERROR ? kExitBadInput : kExitInternal;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"wallx: exact quantized wall-crossing engine"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(wallx_version()));

    std::string lattice_path, targets_path, input_path, out_path, suite;
    std::vector<std::string> table_paths;
    std::vector<long> ks;
    unsigned long long seed = 20240601ull;
    long range = 0, cases = 0;

    auto add_lattice = [&](CLI::App* cmd) {
        cmd->add_option("--lattice", lattice_path, "lattice JSON file")
            ->required();
    };
    auto add_targets = [&](CLI::App* cmd) {
        cmd->add_option("--targets", targets_path, "targets JSON file")
            ->required();
    };
    auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "output file (default: stdout)");
    };

    CLI::App* expand = app.add_subcommand(
        "expand", "expand an invariant table into a pair table at twist k");
    add_lattice(expand);
    expand->add_option("--table", table_paths, "invariant table JSON file")
        ->required();
    expand->add_option("--k", ks, "framing twist")->required();
    add_targets(expand);
    add_out(expand);

    CLI::App* invert = app.add_subcommand(
        "invert", "invert a pair table into an invariant table at twist k");
    add_lattice(invert);
    invert->add_option("--table", table_paths, "pair table JSON file")
        ->required();
    invert->add_option("--k", ks, "framing twist")->required();
    add_targets(invert);
    add_out(invert);

    CLI::App* relation = app.add_subcommand(
        "check-relation",
        "check the wall-crossing relation between two pair tables");
    add_lattice(relation);
    relation
        ->add_option("--table", table_paths,
                     "pair table JSON files (exactly two)")
        ->required()
        ->expected(2);
    relation->add_option("--k", ks, "framing twists (exactly two)")
        ->required()
        ->expected(2);
    add_targets(relation);
    add_out(relation);

    CLI::App* master = app.add_subcommand(
        "master-check", "master-space relation residual for a list of loci");
    master->add_option("--input", input_path, "loci JSON file")->required();
    add_out(master);

    CLI::App* residue = app.add_subcommand(
        "residue", "K-theoretic residue of a rational function of z");
    residue->add_option("--input", input_path, "ZRat JSON file")->required();
    add_out(residue);

    CLI::App* stability = app.add_subcommand(
        "stability", "stability report (tau, tilde_r, lambda_k, genericity)");
    add_lattice(stability);
    add_targets(stability);
    stability->add_option("--k", ks, "twists to evaluate lambda_k at");
    add_out(stability);

    CLI::App* verify = app.add_subcommand(
        "verify", "run a verification suite and stream a JSONL report");
    verify
        ->add_option("--suite", suite,
                     "qint | jacobi | comb | projective | master | residue | "
                     "stability | roundtrip | all")
        ->required();
    verify->add_option("--seed", seed, "PRNG seed (default 20240601)");
    verify->add_option("--range", range, "sweep range (suite default if 0)");
    verify->add_option("--n", cases, "case count (suite default if 0)");
    add_out(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    EnginePtr engine(wallx_engine_new());
    if (!engine) {
        std::cerr << "internal error: cannot create engine\n";
        return kExitInternal;
    }

    auto load = [&](const std::string& path, std::string& text) {
        std::string err;
        if (!read_file(path, text, err)) {
            std::cerr << "input error: " << err << "\n";
            return false;
        }
        return true;
    };

    auto parse_lattice = [&](LatticePtr& lattice) {
        std::string text;
        if (!load(lattice_path, text))
            return kExitBadInput;
        wallx_lattice* raw = nullptr;
        wallx_status st = wallx_lattice_parse(engine.get(), text.c_str(), &raw);
        if (st != WALLX_OK) {
            std::cerr << "input error: " << wallx_last_error(engine.get())
                      << "\n";
            return st == WALLX_PARSE_ERROR ? kExitBadInput : kExitInternal;
        }
        lattice.reset(raw);
        return kExitOk;
    };

    if (expand->parsed() || invert->parsed()) {
        LatticePtr lattice;
        if (int rc = parse_lattice(lattice); rc != kExitOk)
            return rc;
        std::string table, targets;
        if (!load(table_paths[0], table) || !load(targets_path, targets))
            return kExitBadInput;
        OwnedString reply;
        wallx_status st =
            expand->parsed()
                ? wallx_expand(engine.get(), lattice.get(), table.c_str(),
                               ks[0], targets.c_str(), reply.slot())
                : wallx_invert(engine.get(), lattice.get(), table.c_str(),
                               ks[0], targets.c_str(), reply.slot());
        return finish(engine.get(), st, reply, out_path);
    }

    if (relation->parsed()) {
        LatticePtr lattice;
        if (int rc = parse_lattice(lattice); rc != kExitOk)
            return rc;
        std::string table1, table2, targets;
        if (!load(table_paths[0], table1) || !load(table_paths[1], table2) ||
            !load(targets_path, targets))
            return kExitBadInput;
        OwnedString reply;
        wallx_status st = wallx_check_relation(
            engine.get(), lattice.get(), table1.c_str(), ks[0], table2.c_str(),
            ks[1], targets.c_str(), reply.slot());
        return finish(engine.get(), st, reply, out_path);
    }

    if (master->parsed() || residue->parsed()) {
        std::string input;
        if (!load(input_path, input))
            return kExitBadInput;
        OwnedString reply;
        wallx_status st =
            master->parsed()
                ? wallx_master_check(engine.get(), input.c_str(), reply.slot())
                : wallx_kres(engine.get(), input.c_str(), reply.slot());
        return finish(engine.get(), st, reply, out_path);
    }

    if (stability->parsed()) {
        LatticePtr lattice;
        if (int rc = parse_lattice(lattice); rc != kExitOk)
            return rc;
        std::string targets;
        if (!load(targets_path, targets))
            return kExitBadInput;
        OwnedString reply;
        wallx_status st = wallx_stability(engine.get(), lattice.get(),
                                          targets.c_str(), ks.data(), ks.size(),
                                          reply.slot());
        return finish(engine.get(), st, reply, out_path);
    }

    if (verify->parsed()) {
        OwnedString reply;
        wallx_status st = wallx_verify(engine.get(), suite.c_str(), seed,
                                       range, cases, reply.slot());
        return finish(engine.get(), st, reply, out_path);
    }

    return kExitBadInput;
}

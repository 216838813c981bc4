#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "graphex/errors.hpp"
#include "graphex/format.hpp"
#include "graphex/lattice.hpp"
#include "graphex/oracle.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw graphex::Error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw graphex::Error("cannot open '" + path + "' for writing");
    out << text;
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// kind specs given on the command line are usage, not data
graphex::GraphKind parse_kind_arg(const std::string& spec) {
    try {
        return graphex::parse_kind(spec);
    } catch (const graphex::ParseError& e) {
        throw UsageError(std::string("bad kind spec: ") + e.what());
    }
}

const char* relation_symbol(graphex::Order o) {
    switch (o) {
        case graphex::Order::Equivalent: return "≈";       // ≈
        case graphex::Order::LessOrEqual: return "≼";      // ≼
        case graphex::Order::GreaterOrEqual: return "≽";   // ≽
        case graphex::Order::Incomparable: return "∥";     // ∥
    }
    return "?";
}

void print_report(const graphex::VerificationReport& r, bool fuzzed) {
    std::cout << (fuzzed ? "fuzz " : "verify ") << r.embedding << ": universe "
              << r.universe_size << ", forward failures " << r.forward_failures
              << ", roundtrip failures " << r.roundtrip_failures
              << ", injectivity collisions " << r.injectivity_collisions << " -> "
              << (r.ok() ? "ok" : "FAIL") << "\n";
    for (const std::string& ex : r.examples) std::cerr << ex << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph representation toolkit: conversions, expressivity order, oracle"};
    app.require_subcommand(1);

    std::string in_path, out_path, to_spec, chain_path, emit_chain_path;
    std::string kind1, kind2, embedding_name;
    bool exhaustive = false;
    std::uint64_t fuzz_count = 0, fuzz_seed = 1;

    auto* convert = app.add_subcommand("convert", "convert a graph file to another kind");
    convert->add_option("input", in_path, "input file ('-' for stdin)")->required();
    convert->add_option("--to", to_spec, "target kind spec")->required();
    convert->add_option("--out", out_path, "output file (default stdout)");
    convert->add_option("--emit-chain", emit_chain_path, "write the witness chain here");

    auto* invert = app.add_subcommand("invert", "run a witness chain backwards");
    invert->add_option("input", in_path, "image graph file ('-' for stdin)")->required();
    invert->add_option("--chain", chain_path, "chain file written by convert")->required();
    invert->add_option("--out", out_path, "output file (default stdout)");

    auto* order = app.add_subcommand("order", "compare two kinds in the expressivity order");
    order->add_option("kind1", kind1, "first kind spec")->required();
    order->add_option("kind2", kind2, "second kind spec")->required();

    auto* plan = app.add_subcommand("plan", "print the witness chain between two kinds");
    plan->add_option("kind1", kind1, "source kind spec")->required();
    plan->add_option("kind2", kind2, "target kind spec")->required();

    auto* verify = app.add_subcommand("verify", "brute-force checks over small universes");
    verify->add_option("--embedding", embedding_name, "restrict to one embedding family");
    verify->add_flag("--exhaustive", exhaustive, "exhaustive standard universe (default)");
    verify->add_option("--fuzz", fuzz_count, "check N random graphs instead");
    verify->add_option("--seed", fuzz_seed, "random seed for --fuzz");

    auto* validate = app.add_subcommand("validate", "parse and validate a graph file");
    validate->add_option("input", in_path, "input file ('-' for stdin)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (convert->parsed()) {
            graphex::GraphValue g = graphex::parse(read_input(in_path));
            graphex::GraphKind target = parse_kind_arg(to_spec);
            graphex::WitnessChain chain = graphex::plan_chain(g.kind, target);
            graphex::GraphValue image = graphex::apply_chain(chain, g);
            if (!emit_chain_path.empty())
                write_output(emit_chain_path, graphex::chain_to_string(chain));
            write_output(out_path, graphex::serialize(image));
        } else if (invert->parsed()) {
            graphex::GraphValue g = graphex::parse(read_input(in_path));
            graphex::WitnessChain chain = graphex::chain_from_string(read_input(chain_path));
            graphex::GraphValue back = graphex::apply_chain_inverse(chain, g);
            write_output(out_path, graphex::serialize(back));
        } else if (order->parsed()) {
            graphex::GraphKind a = parse_kind_arg(kind1);
            graphex::GraphKind b = parse_kind_arg(kind2);
            graphex::Order rel = graphex::compare_kinds(a, b);
            std::cout << relation_symbol(rel) << " (" << graphex::order_name(rel) << ")\n";
            if (rel == graphex::Order::Equivalent || rel == graphex::Order::LessOrEqual)
                std::cout << graphex::chain_to_string(graphex::plan_chain(a, b));
            if (rel == graphex::Order::Equivalent || rel == graphex::Order::GreaterOrEqual)
                std::cout << graphex::chain_to_string(graphex::plan_chain(b, a));
        } else if (plan->parsed()) {
            graphex::WitnessChain chain =
                graphex::plan_chain(parse_kind_arg(kind1), parse_kind_arg(kind2));
            std::cout << graphex::chain_to_string(chain);
        } else if (verify->parsed()) {
            const std::vector<std::string> families = graphex::family_names();
            if (!embedding_name.empty() &&
                std::find(families.begin(), families.end(), embedding_name) ==
                    families.end()) {
                std::cerr << "unknown embedding family '" << embedding_name << "'\n";
                return 2;
            }
            bool all_ok = true;
            for (const std::string& family : families) {
                if (!embedding_name.empty() && family != embedding_name) continue;
                graphex::GraphKind src = graphex::canonical_source_kind(family);
                auto inst = graphex::make_instance(family, src);
                if (!inst || !inst->invertible()) continue;  // lossy demo family
                graphex::UniverseSpec spec = graphex::standard_universe(src);
                graphex::VerificationReport r =
                    fuzz_count > 0
                        ? graphex::fuzz_embedding(*inst, spec, fuzz_count, fuzz_seed)
                        : graphex::verify_embedding(*inst, spec);
                print_report(r, fuzz_count > 0);
                all_ok = all_ok && r.ok();
            }
            if (!all_ok) return 1;
        } else if (validate->parsed()) {
            graphex::GraphValue g = graphex::parse(read_input(in_path));
            std::cout << "valid " << graphex::format_kind(g.kind) << "\n";
        }
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const graphex::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const graphex::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

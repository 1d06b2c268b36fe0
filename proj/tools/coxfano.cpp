// Command line front end: classification runs, table verification, ring
// invariant reports, discrepancy computations and the deformation-type bound.

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "coxfano/classify.hpp"
#include "coxfano/tdiv.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitResourceCap = 3;

std::uint64_t default_cap() {
    if (const char* env = std::getenv("COXFANO_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        std::cerr << "warning: ignoring malformed COXFANO_CAP\n";
    }
    return 200000000;
}

std::set<long> parse_indices(const std::string& arg) {
    auto dots = arg.find("..");
    std::set<long> out;
    if (dots == std::string::npos) {
        out.insert(std::stol(arg));
    } else {
        long lo = std::stol(arg.substr(0, dots));
        long hi = std::stol(arg.substr(dots + 2));
        for (long v = lo; v <= hi; ++v) out.insert(v);
    }
    if (out.empty() || *out.begin() < 1)
        throw CLI::ValidationError("--picard-index", "indices must be positive");
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Trinomial Cox rings, Fano invariants and classification"};
    app.require_subcommand(1);

    long dim = 2;
    std::string indices_spec = "1";
    bool include_toric = false;
    std::string format;
    std::string output_path;
    std::uint64_t cap = default_cap();
    std::string table_id;
    std::string ring_path;
    std::string fan_path;

    auto* classify = app.add_subcommand("classify", "enumerate Fano classification records");
    classify->add_option("--dim,-d", dim, "variety dimension")->required();
    classify->add_option("--picard-index,-p", indices_spec, "Picard index (N or A..B)")->required();
    classify->add_flag("--include-toric", include_toric, "include weighted projective spaces");
    classify->add_option("--format,-f", format, "markdown, csv or rings")
        ->check(CLI::IsMember({"markdown", "csv", "rings"}));
    classify->add_option("--output,-o", output_path, "write to file instead of stdout");
    classify->add_option("--cap", cap, "resource cap (candidates examined)");

    auto* verify = app.add_subcommand("verify", "diff a classification run against stored tables");
    verify->add_option("--table,-t", table_id,
                       "surfaces_mu_le_6, threefolds_mu_1, threefolds_mu_le_2_count, fourfolds_mu_1")
        ->required();
    verify->add_option("--cap", cap, "resource cap (candidates examined)");

    auto* invariants = app.add_subcommand("invariants", "invariant report for a ring file");
    invariants->add_option("--ring,-r", ring_path, "ring file")->required();
    invariants->add_option("--output,-o", output_path, "write to file instead of stdout");

    auto* discrepancy = app.add_subcommand("discrepancy", "discrepancy report for a fan file");
    discrepancy->add_option("--fan", fan_path, "fan file")->required();
    discrepancy->add_option("--output,-o", output_path, "write to file instead of stdout");

    auto* bound = app.add_subcommand("bound", "deformation-type bound delta(d, mu)");
    bound->add_option("--dim,-d", dim, "variety dimension")->required();
    bound->add_option("--picard-index,-p", indices_spec, "Picard index")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) {
            coxfano::ClassificationQuery q;
            q.dimension = dim;
            q.picard_indices = parse_indices(indices_spec);
            q.include_toric = include_toric;
            q.resource_cap = cap;
            auto records = coxfano::enumerate(q);
            if (format.empty()) format = isatty(fileno(stdout)) ? "markdown" : "csv";
            std::string text;
            if (format == "markdown")
                text = coxfano::render_markdown(records);
            else if (format == "csv")
                text = coxfano::render_csv(records);
            else
                text = coxfano::render_ring_list(records);
            write_output(output_path, text);
            return kExitOk;
        }
        if (verify->parsed()) {
            auto table = coxfano::parse_table_id(table_id);
            if (!table) {
                std::cerr << "unknown table '" << table_id << "'\n";
                return kExitBadInput;
            }
            auto rep = coxfano::verify_against_reference(*table, cap);
            std::cout << coxfano::render_report(rep);
            return rep.pass ? kExitOk : kExitMismatch;
        }
        if (invariants->parsed()) {
            auto doc = coxfano::parse_ring(read_file(ring_path));
            if (auto err = coxfano::validate_triple(doc.triple)) {
                std::cerr << "invalid triple: " << coxfano::to_string(*err) << "\n";
                return kExitBadInput;
            }
            auto c = coxfano::candidate_from_ring(doc);
            if (!coxfano::relation_degree(c)) {
                std::cerr << "weights are not homogeneous\n";
                return kExitBadInput;
            }
            write_output(output_path, coxfano::render_report(coxfano::invariant_report(c)));
            return kExitOk;
        }
        if (discrepancy->parsed()) {
            auto fan = coxfano::parse_fan(read_file(fan_path));
            auto rep = coxfano::solve_discrepancies(fan);
            write_output(output_path, coxfano::render_report(rep));
            return kExitOk;
        }
        if (bound->parsed()) {
            auto indices = parse_indices(indices_spec);
            if (indices.size() != 1) {
                std::cerr << "bound needs a single Picard index\n";
                return kExitBadInput;
            }
            std::cout << coxfano::delta_bound(dim, *indices.begin()).get_str() << "\n";
            return kExitOk;
        }
    } catch (const coxfano::ResourceCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}

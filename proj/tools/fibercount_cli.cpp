// Command-line front end: fiber-size estimates, exact small-n oracle dumps,
// and the model-comparison experiment harness.
//
// Exit codes: 0 success, 2 parse/input error, 3 not-graphical target,
// 4 estimation failure, 5 oracle size limit.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fibercount/errors.hpp"
#include "fibercount/experiments.hpp"
#include "fibercount/fibers.hpp"
#include "fibercount/io.hpp"
#include "fibercount/oracle.hpp"
#include "fibercount/paths.hpp"

namespace {

using namespace fibercount;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNotGraphical = 3;
constexpr int kExitEstimation = 4;
constexpr int kExitOracleLimit = 5;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    return nlohmann::json::parse(in);
}

std::vector<std::int64_t> int_array(const nlohmann::json& value, const std::string& what) {
    if (!value.is_array()) throw std::invalid_argument(what + ": expected a JSON array");
    std::vector<std::int64_t> out;
    for (const auto& item : value) {
        if (!item.is_number_integer() && !item.is_number_unsigned())
            throw std::invalid_argument(what + ": expected integers");
        out.push_back(item.get<std::int64_t>());
    }
    return out;
}

DegreeDistribution load_degree_distribution(const std::string& path) {
    const nlohmann::json doc = load_json(path);
    const nlohmann::json& array = doc.is_object() ? doc.at("D") : doc;
    DegreeDistribution D;
    for (std::int64_t c : int_array(array, "degree distribution")) D.counts.push_back(c);
    D.validate();
    return D;
}

DegreeSequence load_degree_sequence(const std::string& path) {
    const nlohmann::json doc = load_json(path);
    const nlohmann::json& array = doc.is_object() ? doc.at("d") : doc;
    DegreeSequence d;
    for (std::int64_t deg : int_array(array, "degree sequence"))
        d.degrees.push_back(static_cast<int>(deg));
    d.validate();
    return d;
}

std::vector<std::vector<std::int64_t>> load_square_matrix(const nlohmann::json& value,
                                                          const std::string& what) {
    if (!value.is_array()) throw std::invalid_argument(what + ": expected a matrix");
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& row : value) rows.push_back(int_array(row, what));
    for (const auto& row : rows)
        if (row.size() != rows.size()) throw std::invalid_argument(what + ": matrix must be square");
    return rows;
}

MixingMatrix load_mixing_matrix(const std::string& path) {
    const nlohmann::json doc = load_json(path);
    const auto rows = load_square_matrix(doc.is_object() ? doc.at("MM") : doc, "mixing matrix");
    MixingMatrix mm(static_cast<int>(rows.size()));
    for (std::size_t k = 0; k < rows.size(); ++k) {
        for (std::size_t l = k; l < rows.size(); ++l) {
            if (rows[k][l] != rows[l][k])
                throw std::invalid_argument("mixing matrix: must be symmetric");
            mm.set(static_cast<int>(k), static_cast<int>(l), rows[k][l]);
        }
    }
    return mm;
}

DegreeMixingMatrix load_degree_mixing_matrix(const std::string& path, int* file_n) {
    const nlohmann::json doc = load_json(path);
    const auto rows =
        load_square_matrix(doc.is_object() ? doc.at("DMM") : doc, "degree mixing matrix");
    if (doc.is_object() && doc.contains("n")) *file_n = doc.at("n").get<int>();
    DegreeMixingMatrix dmm(static_cast<int>(rows.size()));
    for (std::size_t k = 0; k < rows.size(); ++k) {
        for (std::size_t l = k; l < rows.size(); ++l) {
            if (rows[k][l] != rows[l][k])
                throw std::invalid_argument("degree mixing matrix: must be symmetric");
            dmm.set(static_cast<int>(k), static_cast<int>(l), rows[k][l]);
        }
    }
    return dmm;
}

struct CountOptions {
    std::string property;
    int n = 0;
    std::int64_t x = -1;
    std::string file;
    std::string graph_file;
    std::string covariates_file;
    std::string mode = "standard";
    std::string out;
};

int run_count(const CountOptions& opt) {
    const NewmanMode mode = newman_mode_from_name(opt.mode);
    const PropertyKind property = property_kind_from_name(opt.property);
    FiberEstimate est;
    switch (property) {
        case PropertyKind::edges: {
            if (!opt.graph_file.empty()) {
                const Graph g = read_edge_list_file(opt.graph_file);
                est = count_edges_fiber(g.vertex_count(), phi_edges(g));
            } else {
                if (opt.n <= 0 || opt.x < 0)
                    throw std::invalid_argument("count edges: need --graph or both --n and --x");
                est = count_edges_fiber(opt.n, opt.x);
            }
            break;
        }
        case PropertyKind::degree_distribution: {
            DegreeDistribution D;
            if (!opt.graph_file.empty())
                D = degree_distribution(read_edge_list_file(opt.graph_file));
            else if (!opt.file.empty())
                D = load_degree_distribution(opt.file);
            else
                throw std::invalid_argument("count degdist: need --graph or --file");
            est = count_degdist_fiber(D, mode);
            break;
        }
        case PropertyKind::degree_sequence: {
            DegreeSequence d;
            if (!opt.graph_file.empty())
                d = degree_sequence(read_edge_list_file(opt.graph_file));
            else if (!opt.file.empty())
                d = load_degree_sequence(opt.file);
            else
                throw std::invalid_argument("count degseq: need --graph or --file");
            est = count_degseq_fiber(d, mode);
            break;
        }
        case PropertyKind::mixing: {
            if (opt.covariates_file.empty())
                throw std::invalid_argument("count mixing: need --covariates");
            const CovariateAssignment a = read_covariates_file(opt.covariates_file);
            MixingMatrix mm;
            if (!opt.graph_file.empty())
                mm = mixing_matrix(read_edge_list_file(opt.graph_file), a);
            else if (!opt.file.empty())
                mm = load_mixing_matrix(opt.file);
            else
                throw std::invalid_argument("count mixing: need --graph or --file");
            if (mm.categories() != a.categories)
                throw std::invalid_argument("count mixing: matrix size differs from categories");
            est = count_mixing_fiber(a, mm);
            break;
        }
        case PropertyKind::degree_mixing: {
            DegreeMixingMatrix dmm;
            int n = opt.n;
            if (!opt.graph_file.empty()) {
                const Graph g = read_edge_list_file(opt.graph_file);
                dmm = degree_mixing_matrix(g);
                dmm.shrink_to_content();
                n = g.vertex_count();
            } else if (!opt.file.empty()) {
                int file_n = 0;
                dmm = load_degree_mixing_matrix(opt.file, &file_n);
                if (n <= 0) n = file_n;
                if (n <= 0)
                    throw std::invalid_argument("count degmix: need --n (or \"n\" in the file)");
            } else {
                throw std::invalid_argument("count degmix: need --graph or --file");
            }
            est = count_degmix_fiber(dmm, n);
            break;
        }
    }
    write_output(est.to_json(), opt.out);
    return kExitOk;
}

int run_path_dump(const CountOptions& opt) {
    const PropertyKind property = property_kind_from_name(opt.property);
    EdgePath path;
    switch (property) {
        case PropertyKind::edges:
            if (opt.n <= 0 || opt.x < 0)
                throw std::invalid_argument("path edges: need --n and --x");
            path = edge_count_path(opt.n, opt.x);
            break;
        case PropertyKind::degree_distribution:
            path = havel_hakimi_path(!opt.graph_file.empty()
                                         ? degree_distribution(read_edge_list_file(opt.graph_file))
                                         : load_degree_distribution(opt.file));
            break;
        case PropertyKind::mixing: {
            const CovariateAssignment a = read_covariates_file(opt.covariates_file);
            const MixingMatrix mm = !opt.graph_file.empty()
                                        ? mixing_matrix(read_edge_list_file(opt.graph_file), a)
                                        : load_mixing_matrix(opt.file);
            path = mixing_path(a, mm);
            break;
        }
        case PropertyKind::degree_mixing: {
            int n = opt.n;
            DegreeMixingMatrix dmm;
            if (!opt.graph_file.empty()) {
                const Graph g = read_edge_list_file(opt.graph_file);
                dmm = degree_mixing_matrix(g);
                n = g.vertex_count();
            } else {
                int file_n = 0;
                dmm = load_degree_mixing_matrix(opt.file, &file_n);
                if (n <= 0) n = file_n;
            }
            path = degree_mixing_path(dmm, n);
            break;
        }
        case PropertyKind::degree_sequence:
            throw std::invalid_argument("path: degree sequences use the degdist path");
    }
    std::ostringstream text;
    write_edge_list(text, path.final_graph());
    write_output(text.str(), opt.out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fiber-size estimation for labeled graphs"};
    app.require_subcommand(1);

    std::function<int()> action;

    // count
    CountOptions count_opt;
    auto* count = app.add_subcommand("count", "estimate one fiber size, JSON to stdout");
    count->add_option("--property", count_opt.property, "edges|degdist|degseq|mixing|degmix")
        ->required();
    count->add_option("--n", count_opt.n, "vertex count (edges, degmix)");
    count->add_option("--x", count_opt.x, "edge count target (edges)");
    count->add_option("--file", count_opt.file, "JSON target file");
    count->add_option("--graph", count_opt.graph_file, "edge-list file; target taken from the graph");
    count->add_option("--covariates", count_opt.covariates_file, "covariate label file (mixing)");
    count->add_option("--newman-mode", count_opt.mode, "standard|as-printed")
        ->envname("FIBERCOUNT_NEWMAN_MODE");
    count->add_option("--out", count_opt.out, "write to file instead of stdout");
    count->callback([&] { action = [&] { return run_count(count_opt); }; });

    // path
    CountOptions path_opt;
    auto* path_cmd = app.add_subcommand("path", "dump a construction path as an ordered edge list");
    path_cmd->add_option("--property", path_opt.property, "edges|degdist|mixing|degmix")->required();
    path_cmd->add_option("--n", path_opt.n, "vertex count");
    path_cmd->add_option("--x", path_opt.x, "edge count target (edges)");
    path_cmd->add_option("--file", path_opt.file, "JSON target file");
    path_cmd->add_option("--graph", path_opt.graph_file, "edge-list file; target taken from the graph");
    path_cmd->add_option("--covariates", path_opt.covariates_file, "covariate label file (mixing)");
    path_cmd->add_option("--out", path_opt.out, "write to file instead of stdout");
    path_cmd->callback([&] { action = [&] { return run_path_dump(path_opt); }; });

    // table-edges
    int te_n = 1000;
    std::int64_t te_xmax = 10;
    std::string te_out;
    auto* table = app.add_subcommand("table-edges", "edge-count table: recursive vs closed form, CSV");
    table->add_option("--n", te_n, "vertex count");
    table->add_option("--x-max", te_xmax, "largest edge count");
    table->add_option("--out", te_out, "write to file instead of stdout");
    table->callback([&] {
        action = [&] {
            write_output(table_edges_csv(table_edges(te_n, te_xmax)), te_out);
            return kExitOk;
        };
    });

    // regular-compare
    std::vector<int> rc_n{1000};
    std::vector<int> rc_d{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    std::string rc_mode = "standard";
    std::string rc_out;
    auto* regular = app.add_subcommand("regular-compare",
                                       "d-regular: recursive estimate vs asymptotic reference, CSV");
    regular->add_option("--n", rc_n, "vertex counts");
    regular->add_option("--d", rc_d, "degrees");
    regular->add_option("--newman-mode", rc_mode, "standard|as-printed")
        ->envname("FIBERCOUNT_NEWMAN_MODE");
    regular->add_option("--out", rc_out, "write to file instead of stdout");
    regular->callback([&] {
        action = [&] {
            write_output(regular_compare_csv(
                             regular_compare(rc_n, rc_d, newman_mode_from_name(rc_mode))),
                         rc_out);
            return kExitOk;
        };
    });

    // shared experiment flags
    struct ExperimentOptions {
        int n = 1000;
        int m = 1;
        int samples = 20;
        int inner_samples = 20;
        std::uint64_t seed = 12345;
        std::string mode = "standard";
        std::string out;
    };

    ExperimentOptions ba_er_opt;
    auto* ba_er_cmd = app.add_subcommand("ba-er", "paired BA/ER degree-distribution fibers");
    ba_er_cmd->add_option("--n", ba_er_opt.n, "vertex count");
    ba_er_cmd->add_option("--m", ba_er_opt.m, "BA edges per new vertex");
    ba_er_cmd->add_option("--samples", ba_er_opt.samples, "paired samples");
    ba_er_cmd->add_option("--seed", ba_er_opt.seed, "rng seed")->envname("FIBERCOUNT_SEED");
    ba_er_cmd->add_option("--newman-mode", ba_er_opt.mode, "standard|as-printed")
        ->envname("FIBERCOUNT_NEWMAN_MODE");
    ba_er_cmd->add_option("--out", ba_er_opt.out, "CSV output file");
    ba_er_cmd->callback([&] {
        action = [&] {
            const BaErReport report =
                run_ba_er(ba_er_opt.n, ba_er_opt.m, ba_er_opt.samples, ba_er_opt.seed,
                          newman_mode_from_name(ba_er_opt.mode));
            if (!ba_er_opt.out.empty()) write_output(ba_er_csv(report), ba_er_opt.out);
            write_output(ba_er_json(report), "");
            return kExitOk;
        };
    });

    ExperimentOptions ba_conf_opt;
    auto* ba_conf_cmd = app.add_subcommand("ba-conf", "paired BA/CONF degree-mixing fibers");
    ba_conf_cmd->add_option("--n", ba_conf_opt.n, "vertex count");
    ba_conf_cmd->add_option("--m", ba_conf_opt.m, "BA edges per new vertex");
    ba_conf_cmd->add_option("--samples", ba_conf_opt.samples, "paired samples");
    ba_conf_cmd->add_option("--seed", ba_conf_opt.seed, "rng seed")->envname("FIBERCOUNT_SEED");
    ba_conf_cmd->add_option("--out", ba_conf_opt.out, "CSV output file");
    ba_conf_cmd->callback([&] {
        action = [&] {
            const BaConfReport report =
                run_ba_conf(ba_conf_opt.n, ba_conf_opt.m, ba_conf_opt.samples, ba_conf_opt.seed);
            if (!ba_conf_opt.out.empty()) write_output(ba_conf_csv(report), ba_conf_opt.out);
            write_output(ba_conf_json(report), "");
            return kExitOk;
        };
    });

    ExperimentOptions div_opt;
    auto* div_cmd = app.add_subcommand("diversity", "distinct degree-mixing-matrix estimates");
    div_cmd->add_option("--n", div_opt.n, "vertex count");
    div_cmd->add_option("--m", div_opt.m, "BA edges per new vertex");
    div_cmd->add_option("--samples", div_opt.samples, "BA degree distributions");
    div_cmd->add_option("--inner-samples", div_opt.inner_samples,
                        "configuration-model draws per distribution");
    div_cmd->add_option("--seed", div_opt.seed, "rng seed")->envname("FIBERCOUNT_SEED");
    div_cmd->add_option("--newman-mode", div_opt.mode, "standard|as-printed")
        ->envname("FIBERCOUNT_NEWMAN_MODE");
    div_cmd->add_option("--out", div_opt.out, "CSV output file");
    div_cmd->callback([&] {
        action = [&] {
            const DiversityReport report =
                run_diversity(div_opt.n, div_opt.m, div_opt.samples, div_opt.inner_samples,
                              div_opt.seed, newman_mode_from_name(div_opt.mode));
            if (!div_opt.out.empty()) write_output(diversity_csv(report), div_opt.out);
            write_output(diversity_json(report), "");
            return kExitOk;
        };
    });

    // oracle
    int oracle_n = 0;
    std::string oracle_property;
    std::string oracle_covariates;
    std::string oracle_out;
    auto* oracle_cmd = app.add_subcommand("oracle", "exact fiber table by exhaustive enumeration");
    oracle_cmd->add_option("--n", oracle_n, "vertex count (<= 7)")->required();
    oracle_cmd->add_option("--property", oracle_property, "edges|degdist|degseq|mixing|degmix")
        ->required();
    oracle_cmd->add_option("--covariates", oracle_covariates, "covariate label file (mixing)");
    oracle_cmd->add_option("--out", oracle_out, "write to file instead of stdout");
    oracle_cmd->callback([&] {
        action = [&] {
            if (oracle_n > kMaxOracleVertices) {
                std::cerr << "oracle: n must be at most " << kMaxOracleVertices << "\n";
                return kExitOracleLimit;
            }
            const PropertyKind property = property_kind_from_name(oracle_property);
            CovariateAssignment a;
            const CovariateAssignment* a_ptr = nullptr;
            if (property == PropertyKind::mixing) {
                if (oracle_covariates.empty())
                    throw std::invalid_argument("oracle mixing: need --covariates");
                a = read_covariates_file(oracle_covariates);
                a_ptr = &a;
            }
            write_output(enumerate_fibers(oracle_n, property, a_ptr).to_json(), oracle_out);
            return kExitOk;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        return action();
    } catch (const fibercount::NotGraphicalError& err) {
        std::cerr << "not graphical: " << err.what() << "\n";
        return kExitNotGraphical;
    } catch (const fibercount::EstimationError& err) {
        std::cerr << "estimation failure: " << err.what() << "\n";
        return kExitEstimation;
    } catch (const nlohmann::json::exception& err) {
        std::cerr << "input error: " << err.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& err) {
        std::cerr << "input error: " << err.what() << "\n";
        return kExitInput;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
}

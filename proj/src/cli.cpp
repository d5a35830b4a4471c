#include "cid/cli.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "cid/abelian.hpp"
#include "cid/critical.hpp"
#include "cid/digraph.hpp"
#include "cid/errors.hpp"
#include "cid/ideals.hpp"
#include "cid/lambda.hpp"
#include "cid/zpoly.hpp"

namespace cid::cli {

namespace {

using nlohmann::json;

std::string strip(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

Digraph digraph_from_json_text(const std::string& text) {
    const json j = json::parse(text);
    const int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> arcs;
    for (const auto& arc : j.at("arcs")) arcs.emplace_back(arc.at(0).get<int>(), arc.at(1).get<int>());
    return from_arcs(n, arcs);
}

json digraph_to_json(const Digraph& d) {
    json arcs = json::array();
    for (auto [u, v] : d.arcs()) arcs.push_back({u, v});
    return json{{"n", d.order()}, {"arcs", arcs}};
}

/// Accepts a digraph6 literal ('&...'), an inline JSON object, or a path to
/// a file holding either form.
Digraph parse_digraph_input(const std::string& arg) {
    const std::string text = strip(arg);
    if (!text.empty() && text[0] == '&') return parse_digraph6(text);
    if (!text.empty() && text[0] == '{') return digraph_from_json_text(text);
    std::ifstream file(arg);
    if (!file) throw std::invalid_argument("cannot open input '" + arg + "'");
    std::stringstream buffer;
    buffer << file.rdbuf();
    const std::string content = strip(buffer.str());
    if (content.empty()) throw std::invalid_argument("input file '" + arg + "' is empty");
    if (content[0] == '&') return parse_digraph6(content);
    return digraph_from_json_text(content);
}

IntMatrix parse_matrix_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot open matrix file '" + path + "'");
    std::stringstream buffer;
    buffer << file.rdbuf();
    const std::string content = strip(buffer.str());
    if (content.empty()) throw std::invalid_argument("matrix file '" + path + "' is empty");
    std::vector<std::vector<long>> rows;
    if (content[0] == '[') {
        const json j = json::parse(content);
        for (const auto& row : j) rows.push_back(row.get<std::vector<long>>());
    } else {
        std::istringstream lines(content);
        std::string line;
        while (std::getline(lines, line)) {
            line = strip(line);
            if (line.empty()) continue;
            std::istringstream fields(line);
            std::vector<long> row;
            long v;
            while (fields >> v) row.push_back(v);
            rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) throw std::invalid_argument("matrix file '" + path + "' holds no rows");
    const std::size_t width = rows[0].size();
    for (const auto& row : rows)
        if (row.size() != width) throw std::invalid_argument("matrix file '" + path + "': ragged rows");
    IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(width));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < width; ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    return m;
}

std::string factors_text(const std::vector<Int>& factors) {
    std::string s = "[";
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s += ",";
        s += factors[i].get_str();
    }
    return s + "]";
}

std::string group_text(const GroupSummary& g) {
    return "factors=" + factors_text(g.factors) + " free_rank=" + std::to_string(g.free_rank) +
           " unit_count=" + std::to_string(g.unit_count);
}

json group_json(const GroupSummary& g) {
    json factors = json::array();
    for (const auto& f : g.factors) factors.push_back(f.get_str());
    return json{{"factors", factors}, {"free_rank", g.free_rank}, {"unit_count", g.unit_count}};
}

struct CheckpointData {
    std::set<std::string> done;
    std::vector<CensusEntry> entries; // census checkpoints carry verdicts
};

CheckpointData read_census_checkpoint(const std::string& path) {
    CheckpointData data;
    std::ifstream file(path);
    if (!file) return data; // absent checkpoint: fresh run
    std::string line;
    while (std::getline(file, line)) {
        line = strip(line);
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string d6, critical_text;
        int gamma;
        if (!(fields >> d6 >> gamma >> critical_text))
            throw std::invalid_argument("checkpoint '" + path + "': malformed line '" + line + "'");
        CensusEntry entry;
        entry.digraph = parse_digraph6(d6);
        entry.d6 = d6;
        entry.gamma = gamma;
        entry.critical = critical_text == "true";
        data.done.insert(d6);
        data.entries.push_back(std::move(entry));
    }
    return data;
}

std::set<std::string> read_line_checkpoint(const std::string& path) {
    std::set<std::string> done;
    std::ifstream file(path);
    if (!file) return done;
    std::string line;
    while (std::getline(file, line)) {
        line = strip(line);
        if (!line.empty()) done.insert(line);
    }
    return done;
}

// ---------------------------------------------------------------------------

int cmd_gamma(const std::string& input, bool trace, std::ostream& out, std::ostream& err) {
    const Digraph d = parse_digraph_input(input);
    GroebnerOptions opts;
    if (trace) opts.trace = &err;
    const CriticalIdealReport report = critical_ideal_report(d, opts);
    out << "digraph " << emit_digraph6(d) << " n=" << d.order() << " arcs=" << d.arc_count() << "\n";
    for (int i = 1; i <= d.order(); ++i)
        out << "I_" << i << ": " << (report.trivial[i - 1] ? "trivial" : "nontrivial") << "\n";
    out << "gamma=" << report.gamma << "\n";
    return 0;
}

int cmd_classify(const std::string& input, bool as_json, std::ostream& out, std::ostream& err) {
    const Digraph d = parse_digraph_input(input);
    if (!is_connected(d)) throw std::invalid_argument("classify: input digraph is disconnected");
    const int gamma = algebraic_corank(d);
    const bool gamma_le_1 = gamma <= 1;
    const bool f_free = is_f_free(d);
    const LambdaRecognition rec = recognize_lambda(d);

    if (as_json) {
        json j{{"digraph6", emit_digraph6(d)},
               {"gamma", gamma},
               {"gamma_le_1", gamma_le_1},
               {"f_free", f_free}};
        if (rec.ok)
            j["lambda"] = json{{"n1", rec.params.n1}, {"n2", rec.params.n2}, {"n3", rec.params.n3}};
        else
            j["lambda"] = json{{"rejected", rec.reason}, {"certificate", rec.certificate}};
        out << j.dump() << "\n";
    } else {
        out << "digraph " << emit_digraph6(d) << "\n";
        out << "gamma=" << gamma << " gamma_le_1=" << (gamma_le_1 ? "true" : "false") << "\n";
        out << "f_free=" << (f_free ? "true" : "false") << "\n";
        if (rec.ok)
            out << "lambda=" << rec.params.to_string() << "\n";
        else {
            out << "lambda=rejected reason=\"" << rec.reason << "\" certificate=[";
            for (std::size_t i = 0; i < rec.certificate.size(); ++i)
                out << (i ? "," : "") << rec.certificate[i];
            out << "]\n";
        }
    }

    if (gamma_le_1 != f_free || f_free != rec.ok) {
        err << "classification verdicts disagree on " << emit_digraph6(d) << "\n";
        return 1;
    }
    return 0;
}

int cmd_census(int n, int jobs, bool emit_members, const std::string& format, const std::string& resume,
               std::ostream& out, std::ostream& err) {
    CheckpointData checkpoint;
    std::ofstream checkpoint_out;
    std::set<std::string>* skip = nullptr;
    if (!resume.empty()) {
        checkpoint = read_census_checkpoint(resume);
        std::erase_if(checkpoint.entries,
                      [&](const CensusEntry& e) { return e.digraph.order() != n; });
        skip = &checkpoint.done;
        checkpoint_out.open(resume, std::ios::app);
        if (!checkpoint_out) throw std::invalid_argument("cannot open checkpoint '" + resume + "' for append");
    }

    std::function<void(const CensusEntry&)> on_entry;
    if (checkpoint_out.is_open())
        on_entry = [&](const CensusEntry& e) {
            checkpoint_out << e.d6 << "\t" << e.gamma << "\t" << (e.critical ? "true" : "false") << "\n";
            checkpoint_out.flush();
        };

    std::vector<CensusEntry> entries;
    try {
        entries = census_scan(n, jobs, skip, on_entry);
    } catch (const resource_limit_error& e) {
        err << e.what() << "\n";
        return 3;
    }
    for (auto& old : checkpoint.entries) entries.push_back(std::move(old));
    std::sort(entries.begin(), entries.end(),
              [](const CensusEntry& a, const CensusEntry& b) { return a.d6 < b.d6; });

    std::map<int, long> counts;
    for (const auto& e : entries)
        if (e.critical) ++counts[e.gamma];

    if (format == "json") {
        json jcounts = json::object();
        for (auto [k, c] : counts) jcounts[std::to_string(k)] = c;
        json j{{"n", n}, {"classes", entries.size()}, {"counts", jcounts}};
        if (emit_members) {
            json members = json::array();
            for (const auto& e : entries)
                if (e.critical) members.push_back(json{{"digraph6", e.d6}, {"gamma", e.gamma}});
            j["members"] = members;
        }
        out << j.dump() << "\n";
    } else {
        for (auto [k, c] : counts) out << n << "\t" << k << "\t" << c << "\n";
        if (emit_members)
            for (const auto& e : entries)
                if (e.critical) out << e.d6 << "\t" << e.gamma << "\ttrue\n";
    }
    return 0;
}

void print_matrix(const IntMatrix& m, std::ostream& out) {
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m.at(i, j).get_str();
        out << "\n";
    }
}

int cmd_snf(const std::string& path, bool transforms, const std::string& format, std::ostream& out) {
    const IntMatrix m = parse_matrix_file(path);
    const SnfResult snf = smith_normal_form(m, transforms);
    if (format == "json") {
        json factors = json::array();
        for (const auto& f : snf.factors) factors.push_back(f.get_str());
        json j{{"factors", factors}, {"rank", snf.rank}, {"zeros", snf.zero_count}};
        out << j.dump() << "\n";
    } else {
        out << "factors=" << factors_text(snf.factors) << " rank=" << snf.rank << " zeros=" << snf.zero_count
            << "\n";
        if (transforms) {
            out << "U:\n";
            print_matrix(*snf.left, out);
            out << "V:\n";
            print_matrix(*snf.right, out);
        }
    }
    return 0;
}

int cmd_groups(const std::string& input, const std::string& format, std::ostream& out) {
    const Digraph d = parse_digraph_input(input);
    const GroupSummary crit = critical_group(d);
    const GroupSummary smith = smith_group(d);
    if (format == "json") {
        json j{{"digraph6", emit_digraph6(d)}, {"critical", group_json(crit)}, {"smith", group_json(smith)}};
        out << j.dump() << "\n";
    } else {
        out << "critical: " << group_text(crit) << "\n";
        out << "smith: " << group_text(smith) << "\n";
    }
    return 0;
}

int cmd_verify_lemma2(std::ostream& out, std::ostream& err) {
    bool all_ok = true;
    for (const auto& member : forbidden_family()) {
        const int gamma = algebraic_corank(member.digraph);
        const bool forb = is_gamma_critical(member.digraph);
        out << member.name << ": gamma=" << gamma << " " << (forb ? "forbidden" : "not forbidden") << "\n";
        if (gamma != 2 || !forb) {
            err << "violation: " << member.name << " (" << emit_digraph6(member.digraph) << ") expected gamma=2 forbidden\n";
            all_ok = false;
        }
    }
    return all_ok ? 0 : 1;
}

int cmd_verify_lemma3(int max_total, std::ostream& out, std::ostream& err) {
    bool all_ok = true;
    for (const auto& p : connected_lambda_params(max_total)) {
        if (p.total() < 2) continue;
        const Digraph d = build_lambda(p);
        const bool i1_trivial = is_trivial(critical_ideal_gens(d, 1));
        const bool i2_matches = ideals_equal(critical_ideal_gens(d, 2), lemma3_ideal(p));
        out << p.to_string() << ": I1 " << (i1_trivial ? "trivial" : "NONTRIVIAL") << ", I2 "
            << (i2_matches ? "matches closed form" : "MISMATCH") << "\n";
        if (!i1_trivial || !i2_matches) {
            err << "violation at " << p.to_string() << " (" << emit_digraph6(d) << ")\n";
            all_ok = false;
        }
    }
    return all_ok ? 0 : 1;
}

int cmd_verify_theorem5(int max_n, int jobs, const std::string& resume, std::ostream& out, std::ostream& err) {
    if (jobs < 1) throw std::invalid_argument("verify-theorem5: jobs must be >= 1");
    std::set<std::string> done;
    std::ofstream checkpoint_out;
    if (!resume.empty()) {
        done = read_line_checkpoint(resume);
        checkpoint_out.open(resume, std::ios::app);
        if (!checkpoint_out) throw std::invalid_argument("cannot open checkpoint '" + resume + "' for append");
    }

    bool all_ok = true;
    for (int n = 1; n <= max_n; ++n) {
        const std::vector<Digraph> classes = enumerate_connected(n);
        std::vector<std::string> failures(classes.size());
        std::vector<char> passed(classes.size(), 0);
        std::mutex checkpoint_mutex;

        auto worker = [&](int tid) {
            for (std::size_t idx = static_cast<std::size_t>(tid); idx < classes.size(); idx += jobs) {
                const Digraph& d = classes[idx];
                const std::string d6 = emit_digraph6(d);
                if (done.count(d6)) continue;
                const bool gamma_le_1 = algebraic_corank(d) <= 1;
                const bool f_free = is_f_free(d);
                const bool lambda_ok = recognize_lambda(d).ok;
                if (gamma_le_1 != f_free || f_free != lambda_ok) {
                    std::ostringstream msg;
                    msg << "equivalence fails at " << d6 << ": gamma_le_1=" << gamma_le_1
                        << " f_free=" << f_free << " lambda=" << lambda_ok;
                    failures[idx] = msg.str();
                } else {
                    passed[idx] = 1;
                    if (checkpoint_out.is_open()) {
                        std::lock_guard lock(checkpoint_mutex);
                        checkpoint_out << d6 << "\n";
                        checkpoint_out.flush();
                    }
                }
            }
        };
        if (jobs == 1) {
            worker(0);
        } else {
            std::vector<std::thread> threads;
            for (int t = 0; t < jobs; ++t) threads.emplace_back(worker, t);
            for (auto& t : threads) t.join();
        }

        long checked = 0;
        for (std::size_t idx = 0; idx < classes.size(); ++idx) {
            if (passed[idx] || !failures[idx].empty()) ++checked;
            if (!failures[idx].empty()) {
                err << failures[idx] << "\n";
                all_ok = false;
            }
        }
        out << "n=" << n << ": " << checked << " classes checked\n";
    }
    out << (all_ok ? "three-way equivalence holds" : "three-way equivalence VIOLATED") << "\n";
    return all_ok ? 0 : 1;
}

int cmd_verify_corollaries(int max_total, std::ostream& out, std::ostream& err) {
    bool all_ok = true;
    for (const auto& p : connected_lambda_params(max_total)) {
        const Digraph d = build_lambda(p);
        const GroupSummary crit = critical_group(d);
        const GroupSummary smith = smith_group(d);
        const bool c7 = corollary7_predicate(p);
        const bool c9 = corollary9_predicate(p);
        const bool c7_match = c7 == (crit.unit_count == 1);
        const bool c9_match = c9 == (smith.unit_count == 1);
        out << p.to_string() << ": critical unit_count=" << crit.unit_count << " predicate=" << (c7 ? "yes" : "no")
            << (c7_match ? "" : " FINDING") << "; smith unit_count=" << smith.unit_count
            << " predicate=" << (c9 ? "yes" : "no") << (c9_match ? "" : " FINDING") << "\n";
        if (!c7_match) {
            err << "finding: case list disagrees with critical group at " << p.to_string() << " (unit_count="
                << crit.unit_count << ", predicate=" << (c7 ? "true" : "false") << ")\n";
            all_ok = false;
        }
        if (!c9_match) {
            err << "finding: case list disagrees with Smith group at " << p.to_string() << " (unit_count="
                << smith.unit_count << ", predicate=" << (c9 ? "true" : "false") << ")\n";
            all_ok = false;
        }
    }
    return all_ok ? 0 : 1;
}

int cmd_convert(const std::string& input, std::ostream& out) {
    const std::string text = strip(input);
    std::string content = text;
    if (!text.empty() && text[0] != '&' && text[0] != '{') {
        std::ifstream file(input);
        if (!file) throw std::invalid_argument("cannot open input '" + input + "'");
        std::stringstream buffer;
        buffer << file.rdbuf();
        content = strip(buffer.str());
    }
    if (!content.empty() && content[0] == '&') {
        out << digraph_to_json(parse_digraph6(content)).dump() << "\n";
    } else {
        out << emit_digraph6(digraph_from_json_text(content)) << "\n";
    }
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"critical ideals, algebraic co-rank and abelian group invariants of digraphs"};
    app.require_subcommand(1);

    std::string input, format = "text", resume;
    int n = 0, jobs = 1, max_total = 6;
    bool trace = false, emit_members = false, transforms = false;

    auto* gamma_cmd = app.add_subcommand("gamma", "algebraic co-rank and per-index triviality verdicts");
    gamma_cmd->add_option("input", input, "digraph6 string, JSON, or file")->required();
    gamma_cmd->add_flag("--trace", trace, "log completed critical pairs to stderr");

    auto* classify_cmd = app.add_subcommand("classify", "co-rank bound, forbidden-family freeness and Lambda recognition");
    classify_cmd->add_option("input", input)->required();
    classify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* census_cmd = app.add_subcommand("census", "count gamma-critical classes by co-rank");
    census_cmd->add_option("--n", n, "vertex count (2..5)")->required();
    census_cmd->add_option("--jobs", jobs, "worker threads");
    census_cmd->add_flag("--emit-members", emit_members, "dump digraph6 classification lines of the members");
    census_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "tsv", "json"}));
    census_cmd->add_option("--resume", resume, "checkpoint file of completed classification lines");

    auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of an integer matrix");
    snf_cmd->add_option("matrix", input, "matrix file (JSON or whitespace grid)")->required();
    snf_cmd->add_flag("--transforms", transforms, "print unimodular transforms");
    snf_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* groups_cmd = app.add_subcommand("groups", "critical and Smith group invariant factors");
    groups_cmd->add_option("input", input)->required();
    groups_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    app.add_subcommand("verify-lemma2", "all 17 forbidden fixtures have co-rank 2 and are gamma-critical");

    auto* lemma3_cmd = app.add_subcommand("verify-lemma3", "closed-form second critical ideals match computed minors");
    lemma3_cmd->add_option("--max-total", max_total, "largest part-size sum");

    auto* theorem5_cmd = app.add_subcommand("verify-theorem5", "exhaustive three-way equivalence check");
    theorem5_cmd->add_option("--n", n, "largest vertex count (<= 5)")->required();
    theorem5_cmd->add_option("--jobs", jobs, "worker threads");
    theorem5_cmd->add_option("--resume", resume, "checkpoint file of passed digraph6 lines");

    auto* coroll_cmd = app.add_subcommand("verify-corollaries", "predicates against unit invariant factor counts");
    coroll_cmd->add_option("--max-total", max_total, "largest part-size sum");

    auto* convert_cmd = app.add_subcommand("convert", "digraph6 <-> JSON arc list");
    convert_cmd->add_option("input", input)->required();

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    try {
        if (gamma_cmd->parsed()) return cmd_gamma(input, trace, out, err);
        if (classify_cmd->parsed()) return cmd_classify(input, format == "json", out, err);
        if (census_cmd->parsed()) return cmd_census(n, jobs, emit_members, format, resume, out, err);
        if (snf_cmd->parsed()) return cmd_snf(input, transforms, format, out);
        if (groups_cmd->parsed()) return cmd_groups(input, format, out);
        if (app.get_subcommand("verify-lemma2")->parsed()) return cmd_verify_lemma2(out, err);
        if (lemma3_cmd->parsed()) return cmd_verify_lemma3(max_total, out, err);
        if (theorem5_cmd->parsed()) return cmd_verify_theorem5(n, jobs, resume, out, err);
        if (coroll_cmd->parsed()) return cmd_verify_corollaries(max_total, out, err);
        if (convert_cmd->parsed()) return cmd_convert(input, out);
    } catch (const resource_limit_error& e) {
        err << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const capability_error& e) {
        err << "unsupported: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace cid::cli

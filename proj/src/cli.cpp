#include "addsys/cli.hpp"

#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "addsys/decompose.hpp"
#include "addsys/json_io.hpp"
#include "addsys/transform.hpp"
#include "addsys/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace addsys::cli {

namespace {

using nlohmann::json;

int exit_code_for(errc code) {
    switch (code) {
        case errc::structure_violation:
        case errc::no_representation:
        case errc::not_interval_partition:
            return 1;  // the mathematics said no
        default:
            return 2;
    }
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string piece;
    std::istringstream in(text);
    while (std::getline(in, piece, sep)) {
        if (!piece.empty()) out.push_back(piece);
    }
    return out;
}

std::vector<Int> parse_int_list(const std::string& text) {
    std::vector<Int> out;
    for (const std::string& piece : split(text, ',')) out.push_back(parse_int(piece));
    return out;
}

RadixSeq parse_radices(const std::string& text, bool repeat) {
    return RadixSeq(parse_int_list(text), repeat ? RadixSeq::Tail::RepeatLast : RadixSeq::Tail::Finite);
}

Partition parse_parts(const std::string& text) {
    std::vector<std::vector<int>> parts;
    std::set<int> listed;
    int max_index = 0;
    for (const std::string& group : split(text, '|')) {
        std::vector<int> part;
        std::istringstream in(group);
        int index = 0;
        while (in >> index) {
            part.push_back(index);
            listed.insert(index);
            max_index = std::max(max_index, index);
        }
        if (!in.eof()) raise(errc::bad_document, "cannot parse part '" + group + "'");
        if (!part.empty()) parts.push_back(std::move(part));
    }
    // unlisted indices are singleton parts
    for (int i = 1; i <= max_index; ++i) {
        if (!listed.count(i)) parts.push_back({i});
    }
    return Partition(std::move(parts));
}

Assignment parse_assignment(const std::string& text) {
    std::map<int, Int> parts;
    if (text.empty()) return Assignment(std::move(parts));
    for (const std::string& pair : split(text, ',')) {
        auto colon = pair.find(':');
        if (colon == std::string::npos) {
            raise(errc::bad_document, "assignment entries look like index:value, got '" + pair + "'");
        }
        int index = std::stoi(pair.substr(0, colon));
        parts[index] = parse_int(pair.substr(colon + 1));
    }
    return Assignment(std::move(parts));
}

AdditiveSystem load_system(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(errc::bad_document, "cannot open '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return system_from_document(parse_system_document(text.str()));
}

void emit_document(const AdditiveSystem& system, const std::string& out_path, bool as_json,
                   std::ostream& out) {
    json doc = to_json(document_from_system(system));
    if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) raise(errc::bad_document, "cannot write '" + out_path + "'");
        file << doc.dump(2) << '\n';
    }
    if (as_json) {
        out << doc.dump(2) << '\n';
    } else {
        for (int i = 1; i <= system.explicit_count(); ++i) {
            out << "A_" << i << " = " << system.set_at(i).to_string() << '\n';
        }
        if (system.has_tail()) {
            out << "... continues with the blocks of radices " << json(radix_seq_to_json(system.tail())).dump()
                << '\n';
        }
    }
}

json assignment_to_json(const Assignment& assignment) {
    json parts = json::object();
    for (const auto& [index, value] : assignment.parts()) {
        parts[std::to_string(index)] = int_to_json(value);
    }
    return parts;
}

std::string assignment_to_text(const Assignment& assignment) {
    if (assignment.empty()) return "(empty assignment)";
    std::string out;
    for (const auto& [index, value] : assignment.parts()) {
        if (!out.empty()) out += " + ";
        out += value.get_str() + " (set " + std::to_string(index) + ")";
    }
    return out;
}

json decomposition_to_json(const Decomposition& d) {
    json left = json::array(), right = json::array();
    for (const Int& e : d.left.elements()) left.push_back(int_to_json(e));
    for (const Int& e : d.right.elements()) right.push_back(int_to_json(e));
    return json{{"left", std::move(left)}, {"right", std::move(right)}};
}

std::string set_text(const DigitSet& set) { return SetExpr::explicit_set(set).to_string(); }

std::uint64_t parse_bound(const std::string& text) { return to_u64(parse_int(text), "bound"); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact arithmetic for additive systems of nonnegative integers"};
    app.require_subcommand(1);
    int rc = 0;

    // --- bns ---
    auto* bns = app.add_subcommand("bns", "build the number system of a radix sequence");
    struct {
        std::string radices, out_path;
        int depth = 0;
        bool repeat = false, as_json = false;
    } bns_opt;
    bns->add_option("--radices", bns_opt.radices, "comma-separated radices, each >= 2")->required();
    bns->add_option("--depth", bns_opt.depth, "blocks to materialize (default: all listed)");
    bns->add_flag("--repeat", bns_opt.repeat, "repeat the last radix forever");
    bns->add_flag("--json", bns_opt.as_json);
    bns->add_option("--out", bns_opt.out_path, "write the system document here");
    bns->callback([&] {
        RadixSeq radices = parse_radices(bns_opt.radices, bns_opt.repeat);
        int depth = bns_opt.depth > 0 ? bns_opt.depth : radices.prefix_length();
        emit_document(bns_from_radices(radices, depth), bns_opt.out_path, bns_opt.as_json, out);
    });

    // --- verify ---
    auto* verify = app.add_subcommand("verify", "check unique representation below a bound");
    struct {
        std::string system, bound;
        bool as_json = false, serial = false;
        int threads = 0;
    } verify_opt;
    verify->add_option("--system", verify_opt.system)->required();
    verify->add_option("--bound", verify_opt.bound)->required();
    verify->add_flag("--json", verify_opt.as_json);
    verify->add_flag("--serial", verify_opt.serial, "use the serial reference kernel");
    verify->add_option("--threads", verify_opt.threads, "worker threads for the scan");
    verify->callback([&] {
#ifdef _OPENMP
        if (verify_opt.threads > 0) omp_set_num_threads(verify_opt.threads);
#endif
        std::uint64_t bound = parse_bound(verify_opt.bound);
        VerifyOutcome outcome = verify_additive(load_system(verify_opt.system), bound,
                                                verify_opt.serial ? Exec::Serial : Exec::Auto);
        if (outcome.ok()) {
            if (verify_opt.as_json) {
                out << json{{"ok", true}, {"bound", bound}}.dump() << '\n';
            } else {
                out << "ok: every n < " << bound << " has exactly one representation\n";
            }
        } else {
            const CounterExample& ce = *outcome.counterexample;
            if (verify_opt.as_json) {
                json witnesses = json::array();
                for (const Assignment& w : ce.witnesses) witnesses.push_back(assignment_to_json(w));
                out << json{{"ok", false},
                            {"n", int_to_json(ce.n)},
                            {"count", int_to_json(ce.count)},
                            {"witnesses", std::move(witnesses)}}
                           .dump()
                    << '\n';
            } else {
                out << "counterexample: n = " << ce.n.get_str() << " has " << ce.count.get_str()
                    << " representations\n";
                for (const Assignment& w : ce.witnesses) {
                    out << "  " << ce.n.get_str() << " = " << assignment_to_text(w) << '\n';
                }
            }
            rc = 1;
        }
    });

    // --- encode / decode ---
    auto* encode_cmd = app.add_subcommand("encode", "digits of n in a verified system");
    struct {
        std::string system, n;
        bool as_json = false;
    } encode_opt;
    encode_cmd->add_option("--system", encode_opt.system)->required();
    encode_cmd->add_option("--n", encode_opt.n)->required();
    encode_cmd->add_flag("--json", encode_opt.as_json);
    encode_cmd->callback([&] {
        Int n = parse_int(encode_opt.n);
        AdditiveSystem system = load_system(encode_opt.system);
        std::uint64_t need = to_u64(n + 1, "verification bound");
        if (system.claimed_bound() < need) {
            VerifyOutcome outcome = verify_additive(system, need);
            if (!outcome.ok()) {
                raise(errc::structure_violation,
                      "system is not additive: counterexample at n = " + outcome.counterexample->n.get_str());
            }
            system = outcome.system;
        }
        Assignment a = encode(system, n);
        if (encode_opt.as_json) {
            out << json{{"n", int_to_json(n)}, {"assignment", assignment_to_json(a)}}.dump() << '\n';
        } else {
            out << n.get_str() << " = " << assignment_to_text(a) << '\n';
        }
    });

    auto* decode_cmd = app.add_subcommand("decode", "sum an assignment of set elements");
    struct {
        std::string system, assignment;
        bool as_json = false;
    } decode_opt;
    decode_cmd->add_option("--system", decode_opt.system)->required();
    decode_cmd->add_option("--assignment", decode_opt.assignment,
                           "index:value pairs, e.g. 1:1,3:4")->required();
    decode_cmd->add_flag("--json", decode_opt.as_json);
    decode_cmd->callback([&] {
        AdditiveSystem system = load_system(decode_opt.system);
        Int n = decode(system, parse_assignment(decode_opt.assignment));
        if (decode_opt.as_json) {
            out << json{{"n", int_to_json(n)}}.dump() << '\n';
        } else {
            out << n.get_str() << '\n';
        }
    });

    // --- contract ---
    auto* contract_cmd = app.add_subcommand("contract", "sum sets over partition parts");
    struct {
        std::string system, parts, bound, out_path;
        bool as_json = false;
    } contract_opt;
    contract_cmd->add_option("--system", contract_opt.system)->required();
    contract_cmd->add_option("--parts", contract_opt.parts, "e.g. \"1 2|3 4\"; unlisted indices stay put")
        ->required();
    contract_cmd->add_option("--bound", contract_opt.bound, "verification bound for the result (default 4096)");
    contract_cmd->add_flag("--json", contract_opt.as_json);
    contract_cmd->add_option("--out", contract_opt.out_path);
    contract_cmd->callback([&] {
        std::uint64_t bound = contract_opt.bound.empty() ? 4096 : parse_bound(contract_opt.bound);
        AdditiveSystem result = contract(load_system(contract_opt.system), parse_parts(contract_opt.parts),
                                         bound);
        emit_document(result, contract_opt.out_path, contract_opt.as_json, out);
    });

    // --- dilate ---
    auto* dilate_cmd = app.add_subcommand("dilate", "prepend [0,g) and scale every set by g");
    struct {
        std::string system, g, seq, out_path;
        bool as_json = false;
    } dilate_opt;
    dilate_cmd->add_option("--system", dilate_opt.system)->required();
    dilate_cmd->add_option("--g", dilate_opt.g, "single dilation factor");
    dilate_cmd->add_option("--seq", dilate_opt.seq, "comma-separated factors, applied as a tower");
    dilate_cmd->add_flag("--json", dilate_opt.as_json);
    dilate_cmd->add_option("--out", dilate_opt.out_path);
    dilate_cmd->callback([&] {
        if (dilate_opt.g.empty() == dilate_opt.seq.empty()) {
            raise(errc::bad_document, "give exactly one of --g or --seq");
        }
        AdditiveSystem system = load_system(dilate_opt.system);
        AdditiveSystem result = dilate_opt.seq.empty()
                                    ? dilate_system(system, parse_int(dilate_opt.g))
                                    : dilate_by_sequence(system, parse_int_list(dilate_opt.seq));
        emit_document(result, dilate_opt.out_path, dilate_opt.as_json, out);
    });

    // --- decompose ---
    auto* decompose_cmd = app.add_subcommand("decompose", "direct-sum factorizations of a finite set");
    struct {
        std::string set;
        bool brute = false, as_json = false;
        std::size_t cap = 16;
    } decompose_opt;
    decompose_cmd->add_option("--set", decompose_opt.set, "comma-separated elements")->required();
    decompose_cmd->add_flag("--brute", decompose_opt.brute, "exhaustive subset scan");
    decompose_cmd->add_option("--cap", decompose_opt.cap, "size cap for --brute");
    decompose_cmd->add_flag("--json", decompose_opt.as_json);
    decompose_cmd->callback([&] {
        DigitSet set = DigitSet::normalized(parse_int_list(decompose_opt.set));
        std::vector<Decomposition> decs = decompose_opt.brute
                                              ? decompose_set_bruteforce(set, decompose_opt.cap)
                                              : decompose_set(set);
        if (decompose_opt.as_json) {
            json arr = json::array();
            for (const Decomposition& d : decs) arr.push_back(decomposition_to_json(d));
            out << arr.dump() << '\n';
        } else if (decs.empty()) {
            out << "indecomposable\n";
        } else {
            for (const Decomposition& d : decs) {
                out << set_text(d.left) << " (+) " << set_text(d.right) << '\n';
            }
        }
        if (decs.empty()) rc = 1;
    });

    // --- classify ---
    auto* classify_cmd = app.add_subcommand("classify", "indecomposable or a witness split");
    struct {
        std::string system;
        int depth = 1;
        bool as_json = false;
    } classify_opt;
    classify_cmd->add_option("--system", classify_opt.system)->required();
    classify_cmd->add_option("--depth", classify_opt.depth, "sets to inspect")->required();
    classify_cmd->add_flag("--json", classify_opt.as_json);
    classify_cmd->callback([&] {
        auto verdict = classify_system(load_system(classify_opt.system), classify_opt.depth);
        if (classify_opt.as_json) {
            json j{{"indecomposable", !verdict.has_value()}, {"depth", classify_opt.depth}};
            if (verdict) {
                j["index"] = verdict->index;
                j["witness"] = decomposition_to_json(verdict->witness);
            }
            out << j.dump() << '\n';
        } else if (verdict) {
            out << "decomposable: set " << verdict->index << " = " << set_text(verdict->witness.left)
                << " (+) " << set_text(verdict->witness.right) << '\n';
        } else {
            out << "indecomposable (first " << classify_opt.depth << " sets)\n";
        }
        if (verdict) rc = 1;
    });

    // --- refine ---
    auto* refine_cmd = app.add_subcommand("refine", "split radices into prime factors");
    struct {
        std::string radices;
        bool repeat = false, as_json = false;
    } refine_opt;
    refine_cmd->add_option("--radices", refine_opt.radices)->required();
    refine_cmd->add_flag("--repeat", refine_opt.repeat);
    refine_cmd->add_flag("--json", refine_opt.as_json);
    refine_cmd->callback([&] {
        PrimeRefinement refinement = refine_to_prime_radices(parse_radices(refine_opt.radices, refine_opt.repeat));
        if (refine_opt.as_json) {
            json refined = json::array();
            for (const Int& g : refinement.refined.prefix()) refined.push_back(int_to_json(g));
            json grouping = json::array();
            for (const auto& part : refinement.grouping.parts()) grouping.push_back(part);
            out << json{{"refined", std::move(refined)}, {"grouping", std::move(grouping)}}.dump() << '\n';
        } else {
            out << "refined:";
            for (const Int& g : refinement.refined.prefix()) out << ' ' << g.get_str();
            if (refinement.refined.repeats()) out << " ...";
            out << "\ngrouping:";
            for (const auto& part : refinement.grouping.parts()) {
                out << " {";
                for (std::size_t i = 0; i < part.size(); ++i) out << (i ? "," : "") << part[i];
                out << '}';
            }
            out << '\n';
        }
    });

    // --- peel ---
    auto* peel_cmd = app.add_subcommand("peel", "extract [0,g) and the g-dilated residual family");
    struct {
        std::string system, bound;
        bool as_json = false;
    } peel_opt;
    peel_cmd->add_option("--system", peel_opt.system)->required();
    peel_cmd->add_option("--bound", peel_opt.bound)->required();
    peel_cmd->add_flag("--json", peel_opt.as_json);
    peel_cmd->callback([&] {
        PeelResult result = peel(load_system(peel_opt.system), parse_bound(peel_opt.bound));
        if (peel_opt.as_json) {
            json peeled = json::array();
            for (const SetExpr& set : result.peeled) peeled.push_back(set_expr_to_json(set));
            out << json{{"i1", result.i1},
                        {"g", int_to_json(result.g)},
                        {"dilationCase", result.dilation_case},
                        {"peeled", std::move(peeled)}}
                       .dump()
                << '\n';
        } else {
            out << "i1 = " << result.i1 << ", g = " << result.g.get_str()
                << (result.dilation_case ? " (dilation: B_i1 = {0})" : "") << '\n';
            for (std::size_t j = 0; j < result.peeled.size(); ++j) {
                out << "B_" << (j + 1) << " = " << result.peeled[j].to_string() << '\n';
            }
        }
    });

    // --- limit ---
    auto* limit_cmd = app.add_subcommand("limit", "window-stabilized limit of a dilation tower");
    struct {
        std::string radices, base, bound;
        int nmax = 0;
        double window_frac = 0.5;
        bool as_json = false;
    } limit_opt;
    limit_cmd->add_option("--radices", limit_opt.radices, "dilation factors; last repeats as needed")
        ->required();
    limit_cmd->add_option("--base", limit_opt.base, "base system document (default: the trivial system)");
    limit_cmd->add_option("--nmax", limit_opt.nmax)->required();
    limit_cmd->add_option("--bound", limit_opt.bound)->required();
    limit_cmd->add_option("--window-frac", limit_opt.window_frac, "start of the window as a fraction of nmax");
    limit_cmd->add_flag("--json", limit_opt.as_json);
    limit_cmd->callback([&] {
        std::vector<Int> radices = parse_int_list(limit_opt.radices);
        if (radices.empty()) raise(errc::bad_document, "need at least one radix");
        AdditiveSystem base = limit_opt.base.empty() ? AdditiveSystem::trivial() : load_system(limit_opt.base);
        auto family = [&](int n) {
            std::vector<Int> steps;
            for (int i = 0; i < n; ++i) {
                steps.push_back(i < static_cast<int>(radices.size()) ? radices[static_cast<std::size_t>(i)]
                                                                     : radices.back());
            }
            return dilate_by_sequence(base, steps);
        };
        StabilizedLimit limit =
            stabilized_limit(family, limit_opt.nmax, parse_int(limit_opt.bound), limit_opt.window_frac);
        if (limit_opt.as_json) {
            json sets = json::array();
            for (const SetExpr& set : limit.sets) sets.push_back(set_expr_to_json(set));
            out << json{{"windowBegin", limit.window_begin},
                        {"windowEnd", limit.window_end},
                        {"bound", int_to_json(limit.bound)},
                        {"sets", std::move(sets)}}
                       .dump()
                << '\n';
        } else {
            out << "window-stabilized limit (A_n for n in [" << limit.window_begin << ", "
                << limit.window_end << "], elements below " << limit.bound.get_str() << "):\n";
            for (const SetExpr& set : limit.sets) out << "  " << set.to_string() << '\n';
        }
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return 2;
    }
    return rc;
}

}  // namespace addsys::cli

#include "thuekit/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <ostream>

#include "thuekit/builtin.hpp"
#include "thuekit/confluence.hpp"
#include "thuekit/cross_section.hpp"
#include "thuekit/dehn.hpp"
#include "thuekit/errors.hpp"
#include "thuekit/parse.hpp"
#include "thuekit/rewriting.hpp"
#include "thuekit/verify.hpp"

namespace thuekit::cli {

  namespace {

    using nlohmann::json;

    struct Common {
      std::string system_name = "S";
      std::string system_file;
      bool        as_json = false;
    };

    struct Selected {
      std::optional<SystemId> id;
      RewritingSystem         owned;
      std::string             label;

      RewritingSystem const& system() const {
        return id ? builtin_system(*id) : owned;
      }
    };

    // Missing input files are usage errors, not failed checks.
    void require_readable(std::string const& path) {
      if (!std::ifstream(path)) {
        throw ParseError("cannot open " + path);
      }
    }

    Selected select_system(Common const& c) {
      Selected s;
      if (!c.system_file.empty()) {
        require_readable(c.system_file);
        s.owned = load_system_file(c.system_file);
        s.label = c.system_file;
        return s;
      }
      s.id = parse_system_id(c.system_name);
      if (!s.id) {
        throw ParseError("unknown system '" + c.system_name + "' (expected R, S, T or U)");
      }
      s.label = c.system_name;
      return s;
    }

    // Normal form that decides the congruence: R is decided through S and T
    // through U; other systems are assumed complete.
    Word deciding_nf(Selected const& s, Word const& w) {
      if (s.id == SystemId::R || s.id == SystemId::S) {
        return nf_S(w);
      }
      if (s.id == SystemId::T || s.id == SystemId::U) {
        return nf_U(w);
      }
      return normal_form(s.system(), w);
    }

    std::string show(Word const& w) {
      return w.empty() ? "\"\"" : w.to_string();
    }

    json big_json(BigInt const& x) {
      if (x >= 0 && x <= (BigInt(1) << 53)) {
        return static_cast<std::uint64_t>(x);
      }
      return x.str();
    }

    json redex_json(Redex const& r) {
      json j;
      j["rule"]      = r.rule_id;
      j["param"]     = r.param ? json(*r.param) : json(nullptr);
      j["position"]  = big_json(r.position);
      j["direction"] = to_string(r.direction);
      return j;
    }

    // One entry per step with the word after it.
    json trace_json(RewritingSystem const& sys, Derivation const& d) {
      json arr = json::array();
      Word cur = d.start;
      for (auto const& st : d.steps) {
        cur            = apply_redex(sys, cur, st.redex);
        json j         = redex_json(st.redex);
        j["word"]      = cur.to_string();
        arr.push_back(std::move(j));
      }
      return arr;
    }

    void print_trace(std::ostream& out, RewritingSystem const& sys, Derivation const& d) {
      Word        cur = d.start;
      std::size_t i   = 0;
      for (auto const& st : d.steps) {
        cur = apply_redex(sys, cur, st.redex);
        out << "step " << ++i << ": " << st.redex.to_string() << " -> " << show(cur) << "\n";
      }
    }

    json header(std::string const& command) {
      json j;
      j["schema"]  = kJsonSchema;
      j["command"] = command;
      return j;
    }

    Strategy parse_strategy(std::string const& name, std::uint64_t seed) {
      if (name == "leftmost") {
        return Strategy::leftmost();
      }
      if (name == "rightmost") {
        return Strategy::rightmost();
      }
      if (name == "random") {
        return Strategy::random(seed);
      }
      throw ParseError("unknown strategy '" + name + "'");
    }

    void add_common(CLI::App* sub, Common& c) {
      sub->add_option("--system", c.system_name, "builtin system R, S, T or U")
          ->capture_default_str();
      sub->add_option("--system-file", c.system_file, "load a system file instead");
      sub->add_flag("--json", c.as_json, "emit one JSON object");
    }

    json distance_json(CappedDistanceResult const& r, RewritingSystem const& sys) {
      json j;
      j["distance"]   = r.distance ? json(*r.distance) : json(nullptr);
      j["status"]     = to_string(r.status);
      j["length_cap"] = r.length_cap;
      j["dist_cap"]   = r.dist_cap == kNoDistCap ? json(nullptr) : json(r.dist_cap);
      j["explored"]   = r.explored;
      if (r.witness) {
        j["witness"] = trace_json(sys, *r.witness);
      }
      return j;
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"String rewriting toolkit", "thuekit"};
    app.require_subcommand(1);
    Common common;

    // reduce / nf
    std::string word, strategy = "leftmost";
    std::uint64_t seed      = 42;
    std::size_t   max_steps = 10'000'000;
    auto* reduce = app.add_subcommand("reduce", "reduce a word and print the trace");
    auto* nf     = app.add_subcommand("nf", "print the normal form and step count");
    for (auto* sub : {reduce, nf}) {
      add_common(sub, common);
      sub->add_option("word", word, "dense or run-length word")->required();
      sub->add_option("--strategy", strategy, "leftmost, rightmost or random")
          ->capture_default_str();
      sub->add_option("--seed", seed, "seed for the random strategy")->capture_default_str();
      sub->add_option("--max-steps", max_steps, "step budget")->capture_default_str();
    }

    // equal
    std::string u_text, v_text;
    auto*       equal = app.add_subcommand("equal", "decide congruence by normal forms");
    add_common(equal, common);
    equal->add_option("u", u_text)->required();
    equal->add_option("v", v_text)->required();

    // critical-pairs
    std::int64_t max_param = 2;
    std::size_t  cp_steps  = 200;
    auto* cps = app.add_subcommand("critical-pairs", "enumerate and resolve critical pairs");
    add_common(cps, common);
    cps->add_option("--max-param", max_param, "largest schema parameter")->capture_default_str();
    cps->add_option("--max-steps", cp_steps, "step budget per side")->capture_default_str();

    // dehn-distance
    std::size_t length_cap = 0, dist_cap = kNoDistCap, node_budget = kDefaultNodeBudget;
    bool        forward_only = false, with_witness = false;
    auto* dd = app.add_subcommand("dehn-distance", "capped Thue distance between two words");
    add_common(dd, common);
    dd->add_option("u", u_text)->required();
    dd->add_option("v", v_text)->required();
    dd->add_option("--length-cap", length_cap, "longest word searched (default 3 max|u|,|v| + 4)");
    dd->add_option("--dist-cap", dist_cap, "longest path searched");
    dd->add_option("--node-budget", node_budget, "words the search may store")
        ->capture_default_str();
    dd->add_flag("--forward-only", forward_only, "only forward rule applications");
    dd->add_flag("--witness", with_witness, "print a shortest derivation");

    // dehn-profile
    std::size_t max_n = 4, prof_budget = 2'000'000;
    std::string csv_path;
    auto* dp = app.add_subcommand("dehn-profile", "D(n) for n up to --max-n");
    add_common(dp, common);
    dp->add_option("--max-n", max_n, "largest n")->capture_default_str();
    dp->add_option("--length-cap", length_cap, "longest word searched (default 2 max-n + 4)");
    dp->add_option("--dist-cap", dist_cap, "longest path searched");
    dp->add_option("--node-budget", prof_budget, "words stored per search")
        ->capture_default_str();
    dp->add_option("--csv", csv_path, "also write n,D,witness_u,witness_v,status");

    // verify-paper
    std::vector<std::string> lemmas;
    bool                     all = false, quick = false;
    auto* vp = app.add_subcommand("verify-paper", "run property suites");
    vp->add_option("--lemma", lemmas, "suite name (repeatable)");
    vp->add_flag("--all", all, "run every suite");
    vp->add_flag("--quick", quick, "reduced sizes");
    vp->add_option("--seed", seed, "seed for randomized suites")->capture_default_str();
    vp->add_flag("--json", common.as_json, "emit one JSON object");

    // xsection
    std::string dfa_path;
    std::size_t horizon = 8, samples = 64;
    std::int64_t q = 1;
    auto* xs    = app.add_subcommand("xsection", "cross-section checks on a DFA");
    xs->require_subcommand(1);
    auto* check = xs->add_subcommand("check", "group accepted words by S-normal form");
    check->add_option("dfa", dfa_path)->required();
    check->add_option("--horizon", horizon, "longest accepted word examined")
        ->capture_default_str();
    check->add_flag("--json", common.as_json, "emit one JSON object");
    auto* pump = xs->add_subcommand("pump", "pumping falsifier");
    pump->add_option("dfa", dfa_path)->required();
    pump->add_option("--Q", q, "construction parameter 1..3")->capture_default_str();
    pump->add_option("--samples", samples, "pump offsets and enumerated words tried")
        ->capture_default_str();
    pump->add_flag("--json", common.as_json, "emit one JSON object");

    try {
      std::vector<std::string> rev(args.rbegin(), args.rend());
      app.parse(rev);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? kOk : kUsage;
    }

    try {
      if (reduce->parsed() || nf->parsed()) {
        Selected const sel = select_system(common);
        auto const&    sys = sel.system();
        Word const     w   = parse_word(word, sys.alphabet());
        auto const red = reduce_to_normal_form(sys, w, parse_strategy(strategy, seed), max_steps);
        if (common.as_json) {
          json j           = header(reduce->parsed() ? "reduce" : "nf");
          j["system"]      = sel.label;
          j["input"]       = w.to_string();
          j["normal_form"] = red.normal_form.to_string();
          j["steps"]       = red.derivation.size();
          if (reduce->parsed()) {
            j["strategy"] = strategy;
            j["trace"]    = trace_json(sys, red.derivation);
          }
          out << j.dump() << "\n";
        } else {
          if (reduce->parsed()) {
            print_trace(out, sys, red.derivation);
          }
          out << show(red.normal_form) << "\n";
          out << "steps: " << red.derivation.size() << "\n";
        }
        return kOk;
      }

      if (equal->parsed()) {
        Selected const sel = select_system(common);
        Word const     u   = parse_word(u_text, sel.system().alphabet());
        Word const     v   = parse_word(v_text, sel.system().alphabet());
        Word const     nu  = deciding_nf(sel, u);
        Word const     nv  = deciding_nf(sel, v);
        bool const     eq  = nu == nv;
        if (common.as_json) {
          json j     = header("equal");
          j["system"] = sel.label;
          j["equal"]  = eq;
          j["nf_u"]   = nu.to_string();
          j["nf_v"]   = nv.to_string();
          out << j.dump() << "\n";
        } else {
          out << (eq ? "equal" : "not-equal") << "\n";
          out << "nf(u): " << show(nu) << "\n";
          out << "nf(v): " << show(nv) << "\n";
        }
        return eq ? kOk : kRefuted;
      }

      if (cps->parsed()) {
        Selected const sel      = select_system(common);
        auto const&    sys      = sel.system();
        auto const     pairs    = enumerate_critical_pairs(sys, max_param);
        std::size_t    resolved = 0;
        json           arr      = json::array();
        for (auto const& p : pairs) {
          json j;
          j["source"] = p.source.to_string();
          j["first"]  = p.first.to_string();
          j["second"] = p.second.to_string();
          j["kind"]   = to_string(p.kind);
          j["left_reduct"]  = p.left_reduct.to_string();
          j["right_reduct"] = p.right_reduct.to_string();
          std::string status, nf_text;
          try {
            auto const rep = resolve_critical_pair(sys, p, cp_steps);
            if (rep.resolved) {
              ++resolved;
              status  = "RESOLVED";
              nf_text = show(*rep.common_word);
              j["normal_form"] = rep.common_word->to_string();
            } else {
              status  = "UNRESOLVED";
              nf_text = show(rep.left.end) + " / " + show(rep.right.end);
              j["normal_forms"] = {rep.left.end.to_string(), rep.right.end.to_string()};
            }
          } catch (StepBudgetExhausted const&) {
            status  = "UNRESOLVED";
            nf_text = "step budget exhausted";
            j["budget_exhausted"] = true;
          }
          j["status"] = status;
          arr.push_back(std::move(j));
          if (!common.as_json) {
            out << show(p.source) << "\t" << p.first.to_string() << " x "
                << p.second.to_string() << "\t" << status << "\t" << nf_text << "\n";
          }
        }
        if (common.as_json) {
          json j           = header("critical-pairs");
          j["system"]      = sel.label;
          j["param_bound"] = max_param;
          j["pairs"]       = std::move(arr);
          j["resolved"]    = resolved;
          out << j.dump() << "\n";
        } else {
          out << "pairs: " << pairs.size() << " resolved: " << resolved
              << " param-bound: " << max_param << "\n";
        }
        return resolved == pairs.size() ? kOk : kRefuted;
      }

      if (dd->parsed()) {
        Selected const  sel = select_system(common);
        auto const&     sys = sel.system();
        Word const      u   = parse_word(u_text, sys.alphabet());
        Word const      v   = parse_word(v_text, sys.alphabet());
        DistanceOptions o;
        o.length_cap   = length_cap;
        o.dist_cap     = dist_cap;
        o.node_budget  = node_budget;
        o.forward_only = forward_only;
        o.witness      = with_witness;
        auto const r   = capped_distance(sys, u, v, o);
        if (common.as_json) {
          json j      = header("dehn-distance");
          j["system"] = sel.label;
          j["u"]      = u.to_string();
          j["v"]      = v.to_string();
          j.update(distance_json(r, sys));
          out << j.dump() << "\n";
        } else {
          out << (r.distance ? std::to_string(*r.distance) : std::string("-")) << " "
              << to_string(r.status) << "\n";
          out << "length-cap: " << r.length_cap << " explored: " << r.explored << "\n";
          if (r.witness) {
            print_trace(out, sys, *r.witness);
          }
        }
        return r.status == DistanceStatus::exact ? kOk : kRefuted;
      }

      if (dp->parsed()) {
        Selected const     sel = select_system(common);
        DehnProfileOptions o;
        o.length_cap  = length_cap;
        o.dist_cap    = dist_cap;
        o.node_budget = prof_budget;
        auto const points = dehn_profile(sel.system(), max_n, o);
        std::unique_ptr<std::ofstream> csv;
        if (!csv_path.empty()) {
          csv = std::make_unique<std::ofstream>(csv_path);
          if (!*csv) {
            throw Error("cannot write " + csv_path);
          }
          *csv << "n,D,witness_u,witness_v,status\n";
        }
        json arr = json::array();
        for (auto const& p : points) {
          char const* status = p.exact ? "exact" : "lower-bound";
          if (csv) {
            *csv << p.n << "," << p.value << "," << p.witness_u.to_string() << ","
                 << p.witness_v.to_string() << "," << status << "\n";
          }
          if (common.as_json) {
            arr.push_back({{"n", p.n},
                           {"D", p.value},
                           {"witness_u", p.witness_u.to_string()},
                           {"witness_v", p.witness_v.to_string()},
                           {"status", status}});
          } else {
            out << p.n << "\t" << p.value << "\t" << show(p.witness_u) << "\t"
                << show(p.witness_v) << "\t" << status << "\n";
          }
        }
        if (common.as_json) {
          json j      = header("dehn-profile");
          j["system"] = sel.label;
          j["points"] = std::move(arr);
          out << j.dump() << "\n";
        }
        return kOk;
      }

      if (vp->parsed()) {
        if (all == !lemmas.empty()) {
          err << "verify-paper: give either --all or at least one --lemma\n";
          return kUsage;
        }
        for (auto const& l : lemmas) {
          if (!is_suite_name(l)) {
            err << "verify-paper: unknown lemma '" << l << "'\n";
            return kUsage;
          }
        }
        std::vector<std::string> const names = all ? suite_names() : lemmas;
        SuiteOptions                   o;
        o.seed       = seed;
        o.scale      = quick ? SuiteScale::quick : SuiteScale::full;
        std::size_t passed = 0;
        json        arr    = json::array();
        for (auto const& name : names) {
          SuiteResult const r = run_suite(name, o);
          passed += r.pass ? 1 : 0;
          if (common.as_json) {
            arr.push_back({{"name", r.name},
                           {"pass", r.pass},
                           {"checked", r.checked},
                           {"notes", r.notes},
                           {"failures", r.failures}});
          } else {
            out << (r.pass ? "PASS " : "FAIL ") << r.name << " (" << r.checked
                << " cases)\n";
            for (auto const& n : r.notes) {
              out << "  " << n << "\n";
            }
            for (auto const& f : r.failures) {
              out << "  witness: " << f << "\n";
            }
          }
        }
        if (common.as_json) {
          json j      = header("verify-paper");
          j["seed"]   = seed;
          j["scale"]  = quick ? "quick" : "full";
          j["suites"] = std::move(arr);
          j["passed"] = passed;
          out << j.dump() << "\n";
        } else {
          out << "summary: " << passed << "/" << names.size() << " passed\n";
        }
        return passed == names.size() ? kOk : kRefuted;
      }

      if (check->parsed()) {
        require_readable(dfa_path);
        Dfa const  dfa = load_dfa_file(dfa_path);
        auto const rep = check_cross_section(dfa, horizon);
        if (common.as_json) {
          json j        = header("xsection-check");
          j["horizon"]  = rep.horizon;
          j["accepted"] = rep.accepted;
          j["verdict"]  = to_string(rep.verdict);
          json dups     = json::array();
          for (auto const& d : rep.duplicates) {
            dups.push_back({d.first.to_string(), d.second.to_string(),
                            d.normal_form.to_string()});
          }
          j["duplicates"] = std::move(dups);
          json un         = json::array();
          for (auto const& w : rep.unreached_classes) {
            un.push_back(w.to_string());
          }
          j["unreached_classes"] = std::move(un);
          out << j.dump() << "\n";
        } else {
          out << "verdict: " << to_string(rep.verdict) << "\n";
          out << "accepted: " << rep.accepted << " (length <= " << rep.horizon << ")\n";
          out << "duplicates: " << rep.duplicates.size() << "\n";
          for (auto const& d : rep.duplicates) {
            out << "duplicate: " << show(d.first) << " / " << show(d.second)
                << " -> " << show(d.normal_form) << "\n";
          }
          out << "unreached: " << rep.unreached_classes.size() << "\n";
          for (auto const& w : rep.unreached_classes) {
            out << "unreached-class: " << show(w) << "\n";
          }
        }
        return rep.verdict == CrossSectionVerdict::refuted ? kRefuted : kOk;
      }

      if (pump->parsed()) {
        require_readable(dfa_path);
        Dfa const  dfa = load_dfa_file(dfa_path);
        auto const v   = pumping_falsifier(dfa, q, samples);
        if (common.as_json) {
          json j = header("xsection-pump");
          j["Q"] = q;
          if (v) {
            j["violation"] = {{"first", v->first.to_string()},
                              {"second", v->second.to_string()},
                              {"method", v->method},
                              {"run_index", v->run_index ? json(*v->run_index) : json(nullptr)},
                              {"cycle_length",
                               v->cycle_length ? big_json(*v->cycle_length) : json(nullptr)}};
          } else {
            j["violation"] = nullptr;
          }
          out << j.dump() << "\n";
        } else if (v) {
          out << "violation: " << show(v->first) << " / " << show(v->second) << "\n";
          out << "method: " << v->method;
          if (v->run_index) {
            out << " run " << *v->run_index << " cycle " << v->cycle_length->str();
          }
          out << "\n";
        } else {
          out << "no violation found\n";
        }
        return v ? kRefuted : kOk;
      }
    } catch (ParseError const& e) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    } catch (UnknownSymbol const& e) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    } catch (std::invalid_argument const& e) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << "\n";
      return kRefuted;
    }
    return kUsage;
  }

}  // namespace thuekit::cli

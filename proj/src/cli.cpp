#include "factorcrit/cli.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "factorcrit/campaign.hpp"
#include "factorcrit/errors.hpp"
#include "factorcrit/graph_io.hpp"
#include "factorcrit/random_graph.hpp"
#include "factorcrit/report_json.hpp"

namespace factorcrit::cli {

using nlohmann::json;

namespace {

struct GraphSource {
  std::string graph6;
  std::string file;
};

Graph read_graph(const GraphSource& src, std::istream& in) {
  if (!src.graph6.empty()) return parse_graph_auto(src.graph6);
  std::string text;
  if (!src.file.empty()) {
    std::ifstream f(src.file, std::ios::binary);
    if (!f) throw InputError("--file: cannot open " + src.file);
    text.assign(std::istreambuf_iterator<char>(f), {});
  } else {
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_graph_auto(text);
}

std::string format_set(const std::vector<Vertex>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(vs[i]);
  }
  return s + "}";
}

std::string fixed(double x, int digits = 12) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(digits) << x;
  return o.str();
}

std::string sci(double x) {
  std::ostringstream o;
  o << std::scientific << std::setprecision(3) << x;
  return o.str();
}

void emit_json(std::ostream& out, const std::string& command, json body) {
  body["command"] = command;
  out << body.dump(2) << '\n';
}

void print_verdict(std::ostream& out, const CriticalityVerdict& v, std::int64_t k, std::size_t n) {
  if (v.is_critical) {
    out << "critical (k=" << k << ", " << v.subsets_checked << " subsets checked)\n";
  } else if (v.reason == CriticalityReason::Parity) {
    out << "not critical, parity (n=" << n << ", k=" << k << ")\n";
  } else {
    out << "not critical, witness " << format_set(*v.witness) << '\n';
  }
}

void print_report(std::ostream& out, const TheoremReport& r) {
  out << "theorem=" << to_string(r.theorem) << " n=" << r.params.n << " t=" << r.params.t
      << " k=" << r.params.k << '\n';
  for (const auto& h : r.hypotheses)
    out << "  " << h.name << ": " << to_string(h.status) << ' ' << h.values.dump() << '\n';
  if (r.criticality) {
    out << "  criticality: ";
    print_verdict(out, *r.criticality, r.params.k, static_cast<std::size_t>(r.params.n));
  }
  if (r.extremal)
    out << "  extremal(" << (r.theorem == Theorem::Edge ? "closure" : "G") << "): "
        << (*r.extremal ? "yes" : "no") << '\n';
  out << "conclusion=" << to_string(r.conclusion) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Certify k-factor-criticality of t-connected graphs", "factorcrit"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit a JSON report instead of text");

  std::function<int()> action;
  GraphSource src;
  std::int64_t n = 0, t = 0, k = 0, l = 0;
  double tol = kDefaultSpectralTol;
  std::string format = "graph6";
  std::string convert_to = "graph6";
  bool trace = false;
  std::int64_t want_t = -1;
  std::string sub_g6, super_g6;
  std::string config_path, output_path;
  std::int64_t surplus = 0;
  std::uint64_t seed = 0;

  auto add_input = [&](CLI::App* sub) {
    auto* g = sub->add_option("--graph,-g", src.graph6, "Graph as graph6 (or an edge list)");
    auto* f = sub->add_option("--file,-f", src.file, "Read the graph from a file");
    g->excludes(f);
    f->excludes(g);
  };
  auto need = [](CLI::App* sub, const std::string& flags, std::int64_t& v, const std::string& what) {
    sub->add_option(flags, v, what)->required();
  };

  // construct-extremal
  {
    auto* sub = app.add_subcommand("construct-extremal", "Emit K_t v (K_{n+k-2t-1} + (t-k+1)K_1) as graph6");
    need(sub, "-n", n, "order");
    need(sub, "-t", t, "connectivity parameter");
    need(sub, "-k", k, "criticality parameter");
    sub->add_option("--format", format, "graph6 or edges")->check(CLI::IsMember({"graph6", "edges"}));
    sub->callback([&] {
      action = [&] {
        const Graph g = construct_extremal({n, t, k});
        if (as_json) {
          emit_json(out, "construct-extremal", {{"params", to_json(ExtremalParams{n, t, k})},
                                                {"graph6", serialize_graph6(g)},
                                                {"edges", g.edge_count()}});
        } else if (format == "edges") {
          out << serialize_edge_list(g);
        } else {
          out << serialize_graph6(g) << '\n';
        }
        return kExitOk;
      };
    });
  }

  // thresholds
  {
    auto* sub = app.add_subcommand("thresholds", "Edge threshold, extremal edge count and extremal spectral radius");
    need(sub, "-n", n, "order");
    need(sub, "-t", t, "connectivity parameter");
    need(sub, "-k", k, "criticality parameter");
    sub->callback([&] {
      action = [&] {
        const ExtremalParams p{n, t, k};
        validate(p);
        const auto thm4 = thm4_threshold(p);
        const auto edges = extremal_edge_count(p);
        const double rho = extremal_quotient_rho(p);
        if (as_json) {
          emit_json(out, "thresholds", {{"params", to_json(p)},
                                        {"thm4_threshold", thm4},
                                        {"extremal_edges", edges},
                                        {"extremal_rho", rho},
                                        {"edge_order_bound", meets_edge_order_bound(p)},
                                        {"spectral_order_bound", meets_spectral_order_bound(p)}});
        } else {
          out << "thm4=" << thm4 << "\nextremal_edges=" << edges << "\nrho=" << fixed(rho) << '\n'
              << "edge_order_bound=" << (meets_edge_order_bound(p) ? "yes" : "no") << '\n'
              << "spectral_order_bound=" << (meets_spectral_order_bound(p) ? "yes" : "no") << '\n';
        }
        return kExitOk;
      };
    });
  }

  // check-critical
  {
    auto* sub = app.add_subcommand("check-critical", "Decide k-factor-criticality");
    need(sub, "-k", k, "number of deleted vertices");
    add_input(sub);
    sub->callback([&] {
      action = [&] {
        const Graph g = read_graph(src, in);
        const auto v = is_k_factor_critical(g, k);
        if (as_json)
          emit_json(out, "check-critical", {{"k", k}, {"n", g.order()}, {"verdict", to_json(v)}});
        else
          print_verdict(out, v, k, g.order());
        return v.is_critical ? kExitOk : kExitFails;
      };
    });
  }

  // matching
  {
    auto* sub = app.add_subcommand("matching", "Maximum matching");
    add_input(sub);
    sub->callback([&] {
      action = [&] {
        const Graph g = read_graph(src, in);
        const auto m = max_matching(g);
        const bool perfect = 2 * m.size() == g.order();
        if (as_json) {
          emit_json(out, "matching", {{"matching", to_json(m)}, {"perfect", perfect}});
        } else {
          out << "size=" << m.size() << (perfect ? " (perfect)" : "") << '\n';
          for (auto [u, v] : m.pairs) out << u << ' ' << v << '\n';
        }
        return kExitOk;
      };
    });
  }

  // closure
  {
    auto* sub = app.add_subcommand("closure", "l-closure (graph6 out, optional trace)");
    need(sub, "-l", l, "degree-sum threshold");
    sub->add_flag("--trace", trace, "Append the trace as JSON lines");
    add_input(sub);
    sub->callback([&] {
      action = [&] {
        const Graph g = read_graph(src, in);
        const auto c = l_closure(g, l);
        if (as_json) {
          emit_json(out, "closure", {{"graph6", serialize_graph6(c.graph)}, {"trace", to_json(c.trace)}});
        } else {
          out << serialize_graph6(c.graph) << '\n';
          if (trace) out << trace_json_lines(c.trace);
        }
        return kExitOk;
      };
    });
  }

  // closure-check
  {
    auto* sub = app.add_subcommand("closure-check", "Is every nonadjacent degree sum at most l-1?");
    need(sub, "-l", l, "degree-sum threshold");
    add_input(sub);
    sub->callback([&] {
      action = [&] {
        const Graph g = read_graph(src, in);
        const bool ok = closure_degree_condition(g, l);
        if (as_json)
          emit_json(out, "closure-check", {{"l", l}, {"closed", ok}});
        else
          out << (ok ? "closed" : "not closed") << " under l=" << l << '\n';
        return ok ? kExitOk : kExitFails;
      };
    });
  }

  // lemma2
  {
    auto* sub = app.add_subcommand("lemma2", "Criticality of G and of its (n+k-1)-closure");
    need(sub, "-k", k, "criticality parameter");
    add_input(sub);
    sub->callback([&] {
      action = [&] {
        const Graph g = read_graph(src, in);
        const auto r = lemma2_equivalence(g, k);
        if (as_json) {
          emit_json(out, "lemma2", {{"report", to_json(r)}});
        } else {
          out << "G: ";
          print_verdict(out, r.original, k, g.order());
          out << "closure (+" << r.edges_added << " edges): ";
          print_verdict(out, r.closed, k, g.order());
          out << "equivalent=" << (r.equivalent ? "yes" : "no") << '\n';
        }
        return r.equivalent ? kExitOk : kExitFails;
      };
    });
  }

  // connectivity
  {
    auto* sub = app.add_subcommand("connectivity", "Vertex connectivity");
    sub->add_option("-t", want_t, "Also test t-connectivity");
    add_input(sub);
    sub->callback([&] {
      action = [&] {
        const Graph g = read_graph(src, in);
        const auto r = vertex_connectivity(g);
        std::optional<bool> tc;
        if (want_t >= 0) tc = is_t_connected(g, want_t);
        if (as_json) {
          json j{{"connectivity", to_json(r)}};
          if (tc) j["t"] = want_t, j["t_connected"] = *tc;
          emit_json(out, "connectivity", j);
        } else {
          out << "kappa=" << r.kappa << "\nseparator="
              << (r.separator ? format_set(*r.separator) : std::string("none")) << '\n';
          if (tc) out << want_t << "-connected=" << (*tc ? "yes" : "no") << '\n';
        }
        return tc.value_or(true) ? kExitOk : kExitFails;
      };
    });
  }

  // clique / independence
  for (const bool clique : {true, false}) {
    const std::string name = clique ? "clique" : "independence";
    auto* sub = app.add_subcommand(name, clique ? "Clique number with witness" : "Independence number with witness");
    add_input(sub);
    sub->callback([&, clique, name] {
      action = [&, clique, name] {
        const Graph g = read_graph(src, in);
        const auto c = clique ? clique_number(g) : maximum_independent_set(g);
        if (as_json)
          emit_json(out, name, {{clique ? "omega" : "alpha", c.omega}, {"witness", c.witness}});
        else
          out << (clique ? "omega=" : "alpha=") << c.omega << "\nwitness=" << format_set(c.witness) << '\n';
        return kExitOk;
      };
    });
  }

  // favaron
  {
    auto* sub = app.add_subcommand("favaron", "t-connected, alpha <= t-k+1 and n ≡ k (mod 2)");
    need(sub, "-k", k, "criticality parameter");
    need(sub, "-t", t, "connectivity parameter");
    add_input(sub);
    sub->callback([&] {
      action = [&] {
        const Graph g = read_graph(src, in);
        const bool ok = favaron_condition(g, k, t);
        if (as_json)
          emit_json(out, "favaron", {{"k", k}, {"t", t}, {"holds", ok}});
        else
          out << "favaron condition " << (ok ? "holds" : "does not hold") << '\n';
        return ok ? kExitOk : kExitFails;
      };
    });
  }

  // lemma8
  {
    auto* sub = app.add_subcommand("lemma8", "Clique forced by edge excess in a closed t-connected graph");
    need(sub, "-t", t, "connectivity parameter");
    need(sub, "-k", k, "criticality parameter");
    add_input(sub);
    sub->callback([&] {
      action = [&] {
        const Graph g = read_graph(src, in);
        const auto r = lemma8_check(g, t, k);
        if (as_json) {
          emit_json(out, "lemma8", {{"report", to_json(r)}});
        } else {
          out << "edges=" << r.edges << " threshold=" << r.threshold << '\n';
          if (r.status == Lemma8Status::HypothesesUnmet)
            out << "hypotheses unmet: " << r.unmet << '\n';
          else
            out << "omega=" << *r.omega << " required=" << r.required_omega << " -> "
                << to_string(r.status) << '\n';
        }
        return r.status == Lemma8Status::Fail ? kExitFails : kExitOk;
      };
    });
  }

  // is-extremal
  {
    auto* sub = app.add_subcommand("is-extremal", "Recognise K_t v (K_{n+k-2t-1} + (t-k+1)K_1)");
    need(sub, "-t", t, "connectivity parameter");
    need(sub, "-k", k, "criticality parameter");
    add_input(sub);
    sub->callback([&] {
      action = [&] {
        const Graph g = read_graph(src, in);
        const ExtremalParams p{static_cast<std::int64_t>(g.order()), t, k};
        const auto blocks = recognize_extremal(g, p);
        if (as_json) {
          json j{{"params", to_json(p)}, {"extremal", blocks.has_value()}};
          if (blocks)
            j["blocks"] = {{"hub", blocks->hub}, {"middle", blocks->middle}, {"independent", blocks->independent}};
          emit_json(out, "is-extremal", j);
        } else if (blocks) {
          out << "extremal: hub=" << format_set(blocks->hub)
              << " independent=" << format_set(blocks->independent) << '\n';
        } else {
          out << "not extremal\n";
        }
        return blocks ? kExitOk : kExitFails;
      };
    });
  }

  // spectral-radius
  {
    auto* sub = app.add_subcommand("spectral-radius", "Adjacency spectral radius by power iteration");
    sub->add_option("--tol", tol, "Residual tolerance")->check(CLI::PositiveNumber);
    add_input(sub);
    sub->callback([&] {
      action = [&] {
        const Graph g = read_graph(src, in);
        SpectralEstimate s;
        bool converged = true;
        try {
          s = spectral_radius(g, tol);
        } catch (const SpectralConvergenceError& e) {
          s = e.best();
          converged = false;
        }
        if (as_json) {
          emit_json(out, "spectral-radius", {{"estimate", to_json(s)}, {"converged", converged}, {"tol", tol}});
        } else {
          out << "rho=" << fixed(s.rho) << "\nresidual=" << sci(s.residual)
              << "\niterations=" << s.iterations << '\n';
          if (!converged) out << "not converged\n";
        }
        return converged ? kExitOk : kExitFails;
      };
    });
  }

  // hong-bound
  {
    auto* sub = app.add_subcommand("hong-bound", "sqrt(2e - n + 1)");
    add_input(sub);
    sub->callback([&] {
      action = [&] {
        const Graph g = read_graph(src, in);
        const double b = hong_bound(g);
        if (as_json)
          emit_json(out, "hong-bound", {{"bound", b}, {"edges", g.edge_count()}, {"n", g.order()}});
        else
          out << "hong_bound=" << fixed(b) << '\n';
        return kExitOk;
      };
    });
  }

  // monotonicity
  {
    auto* sub = app.add_subcommand("monotonicity", "rho(sub) <= rho(super) for a spanning subgraph");
    sub->add_option("--sub", sub_g6, "Spanning subgraph (graph6)")->required();
    sub->add_option("--super", super_g6, "Supergraph (graph6)")->required();
    sub->callback([&] {
      action = [&] {
        const Graph a = parse_graph_auto(sub_g6);
        const Graph b = parse_graph_auto(super_g6);
        const bool ok = check_spectral_monotonicity(a, b);
        if (as_json)
          emit_json(out, "monotonicity", {{"holds", ok}});
        else
          out << "monotonicity " << (ok ? "holds" : "violated") << '\n';
        return ok ? kExitOk : kExitFails;
      };
    });
  }

  // verify-thm4 / verify-thm5
  for (const Theorem th : {Theorem::Edge, Theorem::Spectral}) {
    const std::string name = th == Theorem::Edge ? "verify-thm4" : "verify-thm5";
    auto* sub = app.add_subcommand(name, th == Theorem::Edge ? "Check the edge-count criterion"
                                                             : "Check the spectral-radius criterion");
    need(sub, "-t", t, "connectivity parameter");
    need(sub, "-k", k, "criticality parameter");
    if (th == Theorem::Spectral)
      sub->add_option("--tol", tol, "Residual tolerance")->check(CLI::PositiveNumber);
    add_input(sub);
    sub->callback([&, th, name] {
      action = [&, th, name] {
        const Graph g = read_graph(src, in);
        const auto r = th == Theorem::Edge ? verify_thm4(g, t, k) : verify_thm5(g, t, k, tol);
        if (as_json)
          emit_json(out, name, {{"report", to_json(r)}});
        else
          print_report(out, r);
        return r.conclusion == Conclusion::Violation ? kExitFails : kExitOk;
      };
    });
  }

  // campaign
  {
    auto* sub = app.add_subcommand("campaign", "Counterexample search over a parameter grid");
    sub->add_option("--config", config_path, "Campaign configuration (JSON)")->required();
    sub->add_option("--output,-o", output_path, "Write the JSON report here instead of stdout");
    sub->callback([&] {
      action = [&] {
        std::ifstream f(config_path);
        if (!f) throw InputError("--config: cannot open " + config_path);
        json cfg;
        try {
          cfg = json::parse(f);
        } catch (const json::parse_error& e) {
          throw ParseError("--config: invalid JSON", e.byte);
        }
        const auto report = search_counterexample(parse_campaign_config(cfg));
        json j = to_json(report);
        j["command"] = "campaign";
        if (!output_path.empty()) {
          std::ofstream o(output_path);
          if (!o) throw InputError("--output: cannot write " + output_path);
          o << j.dump(2) << '\n';
        }
        if (as_json || output_path.empty()) {
          out << j.dump(2) << '\n';
        } else {
          for (const auto& th : report.theorems)
            for (const auto& cell : th.cells) {
              out << to_string(th.theorem) << " n=" << cell.params.n << " t=" << cell.params.t
                  << " k=" << cell.params.k;
              for (const auto& [c, v] : cell.counts) out << ' ' << to_string(c) << '=' << v;
              out << '\n';
            }
          out << "violations=" << report.count(Conclusion::Violation) << '\n';
        }
        return report.violation_found() ? kExitFails : kExitOk;
      };
    });
  }

  // random-graph
  {
    auto* sub = app.add_subcommand("random-graph", "Seeded t-connected graph: circulant backbone plus surplus edges");
    need(sub, "-n", n, "order");
    need(sub, "-t", t, "connectivity guaranteed by the backbone");
    sub->add_option("--surplus", surplus, "Extra random edges")->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", seed, "Seed");
    sub->callback([&] {
      action = [&] {
        if (n < 1) throw InputError("-n: order must be positive");
        const Graph g = random_t_connected(static_cast<std::size_t>(n), t,
                                           static_cast<std::size_t>(surplus), seed);
        if (as_json)
          emit_json(out, "random-graph", {{"graph6", serialize_graph6(g)}, {"edges", g.edge_count()}, {"seed", seed}});
        else
          out << serialize_graph6(g) << '\n';
        return kExitOk;
      };
    });
  }

  // convert
  {
    auto* sub = app.add_subcommand("convert", "Re-encode a graph as graph6 or an edge list");
    sub->add_option("--to", convert_to, "graph6 or edges")->check(CLI::IsMember({"graph6", "edges"}));
    add_input(sub);
    sub->callback([&] {
      action = [&] {
        const Graph g = read_graph(src, in);
        const std::string text = convert_to == "edges" ? serialize_edge_list(g) : serialize_graph6(g) + "\n";
        if (as_json)
          emit_json(out, "convert", {{"format", convert_to}, {"text", text}});
        else
          out << text;
        return kExitOk;
      };
    });
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const ParseError& e) {
    err << "error: parse: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace factorcrit::cli

#include "teichkit/cli/dispatch.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <functional>
#include <memory>

#include "teichkit/cli/fixtures.hpp"
#include "teichkit/cli/json_io.hpp"
#include "teichkit/complex_tori.hpp"

namespace teichkit::cli {

namespace {

using Action = std::function<Json(Tolerance)>;

Complex pair_to_complex(const std::vector<double>& v) { return {v.at(0), v.at(1)}; }

template <class T>
std::shared_ptr<T> slot() {
  return std::make_shared<T>();
}

CLI::Option* add_complex(CLI::App* cmd, const std::string& name, std::shared_ptr<std::vector<double>> store,
                         const std::string& help) {
  return cmd->add_option(name, *store, help)->expected(2)->allow_extra_args(false)->required();
}

atlas::AtlasStructure structure_named(const std::string& name) {
  if (name == "trivial") return atlas::trivial_structure();
  if (name == "conjugation") return atlas::conjugation_structure();
  throw UsageError("unknown atlas structure '" + name + "'");
}

Json error_document(std::string_view code, std::string_view message) {
  Json j;
  j["error"] = code;
  j["message"] = message;
  return j;
}

void register_core(CLI::App& app, Action& action) {
  auto* core = app.add_subcommand("core", "scalar and 2x2 matrix kernels");
  core->require_subcommand(1);

  {
    auto* cmd = core->add_subcommand("roots", "roots of x^2 - t x + d");
    auto d = slot<std::vector<double>>();
    auto t = slot<std::vector<double>>();
    add_complex(cmd, "--d", d, "RE IM");
    add_complex(cmd, "--t", t, "RE IM");
    cmd->callback([&action, d, t] {
      action = [d, t](Tolerance tol) {
        const auto [r1, r2] = quadratic_roots(pair_to_complex(*d), pair_to_complex(*t), tol);
        Json j;
        j["roots"] = Json::array({to_json(r1), to_json(r2)});
        return j;
      };
    });
  }
  {
    auto* cmd = core->add_subcommand("eigen", "eigenvalues and diagonalizability");
    auto m = slot<std::string>();
    cmd->add_option("--matrix", *m, "[[a,b],[c,d]] with [re,im] entries")->required();
    cmd->callback([&action, m] {
      action = [m](Tolerance tol) {
        const Eigen2 e = eigen2(matrix_from_json(parse_document(*m, "--matrix")), tol);
        Json j;
        j["eigenvalues"] = Json::array({to_json(e.first), to_json(e.second)});
        j["diagonalizable"] = e.diagonalizable;
        return j;
      };
    });
  }
  for (const std::string verb : {"det", "trace", "inverse"}) {
    auto* cmd = core->add_subcommand(verb, verb + " of a complex or integer matrix");
    auto m = slot<std::string>();
    auto integer = slot<bool>();
    cmd->add_option("--matrix", *m, "matrix JSON")->required();
    cmd->add_flag("--int", *integer, "treat the matrix as an exact integer matrix");
    cmd->callback([&action, m, integer, verb] {
      action = [m, integer, verb](Tolerance tol) {
        const Json doc = parse_document(*m, "--matrix");
        Json j;
        if (*integer) {
          const IntMatrix2 a = int_matrix_from_json(doc);
          if (verb == "det") j["det"] = a.det();
          if (verb == "trace") j["trace"] = a.trace();
          if (verb == "inverse") j["inverse"] = to_json(a.inverse());
        } else {
          const Matrix2C a = matrix_from_json(doc);
          if (verb == "det") j["det"] = to_json(a.det());
          if (verb == "trace") j["trace"] = to_json(a.trace());
          if (verb == "inverse") j["inverse"] = to_json(a.inverse(tol));
        }
        return j;
      };
    });
  }
  {
    auto* cmd = core->add_subcommand("mul", "matrix product a * b");
    auto a = slot<std::string>();
    auto b = slot<std::string>();
    auto integer = slot<bool>();
    cmd->add_option("--a", *a, "matrix JSON")->required();
    cmd->add_option("--b", *b, "matrix JSON")->required();
    cmd->add_flag("--int", *integer, "exact integer matrices");
    cmd->callback([&action, a, b, integer] {
      action = [a, b, integer](Tolerance) {
        const Json ja = parse_document(*a, "--a");
        const Json jb = parse_document(*b, "--b");
        Json j;
        if (*integer) {
          j["product"] = to_json(int_matrix_from_json(ja) * int_matrix_from_json(jb));
        } else {
          j["product"] = to_json(matrix_from_json(ja) * matrix_from_json(jb));
        }
        return j;
      };
    });
  }
}

void register_tori(CLI::App& app, Action& action) {
  auto* tori_cmd = app.add_subcommand("tori", "one-dimensional complex tori");
  tori_cmd->require_subcommand(1);
  {
    auto* cmd = tori_cmd->add_subcommand("reduce", "reduce tau to the SL2(Z) fundamental domain");
    auto tau = slot<std::vector<double>>();
    add_complex(cmd, "--tau", tau, "RE IM");
    cmd->callback([&action, tau] {
      action = [tau](Tolerance tol) {
        const auto r = tori::reduce_fundamental_domain(tori::LatticeParameter(pair_to_complex(*tau)), tol);
        Json j;
        j["reduced"] = to_json(r.reduced.tau());
        j["witness"] = to_json(r.witness);
        return j;
      };
    });
  }
  {
    auto* cmd = tori_cmd->add_subcommand("equiv", "decide whether two tori are biholomorphic");
    auto tau1 = slot<std::vector<double>>();
    auto tau2 = slot<std::vector<double>>();
    add_complex(cmd, "--tau1", tau1, "RE IM");
    add_complex(cmd, "--tau2", tau2, "RE IM");
    cmd->callback([&action, tau1, tau2] {
      action = [tau1, tau2](Tolerance tol) {
        const auto w = tori::tori_equivalent(tori::LatticeParameter(pair_to_complex(*tau1)),
                                             tori::LatticeParameter(pair_to_complex(*tau2)), tol);
        Json j;
        j["equivalent"] = w.has_value();
        if (w) j["witness"] = to_json(*w);
        return j;
      };
    });
  }
  {
    auto* cmd = tori_cmd->add_subcommand("moebius", "apply an SL2(Z) matrix to tau");
    auto m = slot<std::string>();
    auto tau = slot<std::vector<double>>();
    cmd->add_option("--matrix", *m, "integer matrix JSON")->required();
    add_complex(cmd, "--tau", tau, "RE IM");
    cmd->callback([&action, m, tau] {
      action = [m, tau](Tolerance) {
        const auto out = tori::moebius(int_matrix_from_json(parse_document(*m, "--matrix")),
                                       tori::LatticeParameter(pair_to_complex(*tau)));
        Json j;
        j["tau"] = to_json(out.tau());
        return j;
      };
    });
  }
  {
    auto* cmd = tori_cmd->add_subcommand("lattice", "canonical lattice coordinates of z");
    auto z = slot<std::vector<double>>();
    auto tau = slot<std::vector<double>>();
    add_complex(cmd, "--z", z, "RE IM");
    add_complex(cmd, "--tau", tau, "RE IM");
    cmd->callback([&action, z, tau] {
      action = [z, tau](Tolerance tol) {
        const auto [x, y] = tori::lattice_reduce(pair_to_complex(*z), tori::LatticeParameter(pair_to_complex(*tau)), tol);
        Json j;
        j["x"] = number(x);
        j["y"] = number(y);
        return j;
      };
    });
  }
  {
    auto* cmd = tori_cmd->add_subcommand("compose", "compose two translations of E_tau");
    auto tau = slot<std::vector<double>>();
    auto z1 = slot<std::vector<double>>();
    auto z2 = slot<std::vector<double>>();
    add_complex(cmd, "--tau", tau, "RE IM");
    add_complex(cmd, "--z1", z1, "RE IM");
    add_complex(cmd, "--z2", z2, "RE IM");
    cmd->callback([&action, tau, z1, z2] {
      action = [tau, z1, z2](Tolerance tol) {
        const tori::LatticeParameter t(pair_to_complex(*tau));
        const auto out = tori::translation_compose(tori::TorusTranslation(t, pair_to_complex(*z1), tol),
                                                   tori::TorusTranslation(t, pair_to_complex(*z2), tol), tol);
        Json j;
        j["x"] = number(out.x());
        j["y"] = number(out.y());
        j["z"] = to_json(out.z());
        return j;
      };
    });
  }
}

void register_hopf(CLI::App& app, Action& action) {
  auto* hopf_cmd = app.add_subcommand("hopf", "Hopf surface classification");
  hopf_cmd->require_subcommand(1);
  {
    auto* cmd = hopf_cmd->add_subcommand("classify", "biholomorphism class of a Hopf surface");
    auto m = slot<std::string>();
    auto resonant = slot<std::vector<double>>();
    auto* mopt = cmd->add_option("--matrix", *m, "contracting matrix JSON");
    auto* ropt = cmd->add_option("--resonant", *resonant, "LAMBDA_RE LAMBDA_IM P [C_RE C_IM]")->expected(3, 5);
    mopt->excludes(ropt);
    cmd->require_option(1);
    cmd->callback([&action, m, resonant, mopt] {
      const bool linear = mopt->count() > 0;
      action = [m, resonant, linear](Tolerance tol) {
        hopf::ContractionInput input;
        if (linear) {
          input = hopf::LinearContraction{matrix_from_json(parse_document(*m, "--matrix"))};
        } else {
          const auto& v = *resonant;
          if (v.size() != 3 && v.size() != 5) throw UsageError("--resonant takes 3 or 5 numbers");
          if (v[2] != std::trunc(v[2])) throw UsageError("resonance order P must be an integer");
          hopf::ResonantForm form;
          form.lambda = {v[0], v[1]};
          form.p = static_cast<int>(v[2]);
          if (v.size() == 5) form.c = {v[3], v[4]};
          input = form;
        }
        Json j = to_json(hopf::classify(input, tol));
        const auto [d, t] = hopf::det_trace(hopf::linear_part(input));
        j["det_trace"] = Json::array({to_json(d), to_json(t)});
        return j;
      };
    });
  }
  {
    auto* cmd = hopf_cmd->add_subcommand("contracting", "are both eigenvalues inside the unit disk");
    auto m = slot<std::string>();
    cmd->add_option("--matrix", *m, "matrix JSON")->required();
    cmd->callback([&action, m] {
      action = [m](Tolerance tol) {
        Json j;
        j["contracting"] = hopf::is_contracting(matrix_from_json(parse_document(*m, "--matrix")), tol);
        return j;
      };
    });
  }
  {
    auto* cmd = hopf_cmd->add_subcommand("resonance", "order p with big^p = small");
    auto big = slot<std::vector<double>>();
    auto small = slot<std::vector<double>>();
    add_complex(cmd, "--big", big, "RE IM");
    add_complex(cmd, "--small", small, "RE IM");
    cmd->callback([&action, big, small] {
      action = [big, small](Tolerance tol) {
        const auto p = hopf::resonance_order(pair_to_complex(*big), pair_to_complex(*small), tol);
        Json j;
        j["p"] = p ? Json(*p) : Json(nullptr);
        return j;
      };
    });
  }
  {
    auto* cmd = hopf_cmd->add_subcommand("dettrace", "(det A, Tr A)");
    auto m = slot<std::string>();
    cmd->add_option("--matrix", *m, "matrix JSON")->required();
    cmd->callback([&action, m] {
      action = [m](Tolerance) {
        const auto [d, t] = hopf::det_trace(matrix_from_json(parse_document(*m, "--matrix")));
        Json j;
        j["det"] = to_json(d);
        j["trace"] = to_json(t);
        return j;
      };
    });
  }
  {
    auto* cmd = hopf_cmd->add_subcommand("biholomorphic", "compare two contractions");
    auto a = slot<std::string>();
    auto b = slot<std::string>();
    cmd->add_option("--a", *a, "{\"matrix\": M} or {\"resonant\": {...}}")->required();
    cmd->add_option("--b", *b, "{\"matrix\": M} or {\"resonant\": {...}}")->required();
    cmd->callback([&action, a, b] {
      action = [a, b](Tolerance tol) {
        Json j;
        j["biholomorphic"] = hopf::biholomorphic(contraction_from_json(parse_document(*a, "--a")),
                                                 contraction_from_json(parse_document(*b, "--b")), tol);
        return j;
      };
    });
  }
}

void register_teich(CLI::App& app, Action& action) {
  auto* teich_cmd = app.add_subcommand("teich", "non-Hausdorff Teichmueller space of S3 x S1");
  teich_cmd->require_subcommand(1);
  {
    auto* cmd = teich_cmd->add_subcommand("inD", "membership in the domain D");
    auto d = slot<std::vector<double>>();
    auto t = slot<std::vector<double>>();
    add_complex(cmd, "--d", d, "RE IM");
    add_complex(cmd, "--t", t, "RE IM");
    cmd->callback([&action, d, t] {
      action = [d, t](Tolerance tol) {
        Json j;
        j["in_D"] = teich::is_in_D(pair_to_complex(*d), pair_to_complex(*t), tol);
        return j;
      };
    });
  }
  {
    auto* cmd = teich_cmd->add_subcommand("point", "point encoding a Hopf class");
    auto c = slot<std::string>();
    cmd->add_option("--class", *c, "Hopf class JSON")->required();
    cmd->callback([&action, c] {
      action = [c](Tolerance tol) {
        const auto x = teich::point_of_class(hopf_class_from_json(parse_document(*c, "--class"), tol));
        Json j;
        j["point"] = to_json(x);
        j["image"] = to_json(teich::image(x));
        return j;
      };
    });
  }
  const auto single = [&](const std::string& verb, const std::string& help,
                          std::function<Json(const teich::TeichPoint&, Tolerance)> body) {
    auto* cmd = teich_cmd->add_subcommand(verb, help);
    auto x = slot<std::string>();
    cmd->add_option("--x", *x, "point JSON")->required();
    cmd->callback([&action, x, body] {
      action = [x, body](Tolerance tol) { return body(teich_point_from_json(parse_document(*x, "--x")), tol); };
    });
  };
  single("class", "Hopf class encoded by a point", [](const teich::TeichPoint& x, Tolerance tol) {
    return to_json(teich::class_of_point(x, tol));
  });
  single("image", "(det, trace) image of a point", [](const teich::TeichPoint& x, Tolerance tol) {
    teich::validate(x, tol);
    return to_json(teich::image(x));
  });
  single("twin", "non-separated partner of a point", [](const teich::TeichPoint& x, Tolerance tol) {
    teich::validate(x, tol);
    const auto w = teich::twin(x, tol);
    Json j;
    j["twin"] = w ? to_json(*w) : Json(nullptr);
    return j;
  });
  const auto pair = [&](const std::string& verb, const std::string& help,
                        std::function<bool(const teich::TeichPoint&, const teich::TeichPoint&, Tolerance)> body) {
    auto* cmd = teich_cmd->add_subcommand(verb, help);
    auto x = slot<std::string>();
    auto y = slot<std::string>();
    cmd->add_option("--x", *x, "point JSON")->required();
    cmd->add_option("--y", *y, "point JSON")->required();
    cmd->callback([&action, x, y, body, verb] {
      action = [x, y, body, verb](Tolerance tol) {
        const auto px = teich_point_from_json(parse_document(*x, "--x"));
        const auto py = teich_point_from_json(parse_document(*y, "--y"));
        teich::validate(px, tol);
        teich::validate(py, tol);
        Json j;
        j[verb] = body(px, py, tol);
        return j;
      };
    });
  };
  pair("separated", "do the two points have disjoint neighborhoods", teich::separated);
  pair("adheres", "does every neighborhood of x contain y", teich::adheres);
  {
    auto* cmd = teich_cmd->add_subcommand("nbhd", "basic neighborhood membership");
    auto center = slot<std::string>();
    auto radius = slot<double>();
    auto x = slot<std::string>();
    cmd->add_option("--center", *center, "point JSON")->required();
    cmd->add_option("--radius", *radius, "positive radius")->required();
    cmd->add_option("--x", *x, "point JSON")->required();
    cmd->callback([&action, center, radius, x] {
      action = [center, radius, x](Tolerance tol) {
        const auto c = teich_point_from_json(parse_document(*center, "--center"));
        const auto px = teich_point_from_json(parse_document(*x, "--x"));
        teich::validate(c, tol);
        teich::validate(px, tol);
        Json j;
        j["contains"] = teich::neighborhood_contains(c, *radius, px, tol);
        return j;
      };
    });
  }
}

void register_fol(CLI::App& app, Action& action) {
  auto* fol = app.add_subcommand("fol", "linear foliations of the 2-torus");
  fol->require_subcommand(1);
  const auto single = [&](const std::string& verb, const std::string& help,
                          std::function<Json(const foliation::Slope&)> body) {
    auto* cmd = fol->add_subcommand(verb, help);
    auto alpha = slot<std::string>();
    cmd->add_option("--alpha", *alpha, "\"p/q\" or {\"p\":..,\"q\":..,\"d\":..}")->required();
    cmd->callback([&action, alpha, body] {
      action = [alpha, body](Tolerance) { return body(slope_from_text(*alpha)); };
    });
  };
  single("leaf", "shape of the leaves", [](const foliation::Slope& s) {
    Json j;
    const auto leaf = foliation::leaf_descriptor(s);
    if (const auto* c = std::get_if<foliation::ClosedLeaf>(&leaf)) {
      j["leaf"] = "closed";
      j["vertical"] = c->vertical;
      j["horizontal"] = c->horizontal;
    } else {
      j["leaf"] = "dense";
    }
    return j;
  });
  single("leafspace", "topology of the leaf space", [](const foliation::Slope& s) {
    Json j;
    const auto space = foliation::leaf_space(s);
    if (const auto* c = std::get_if<foliation::Circle>(&space)) {
      j["leaf_space"] = "circle";
      j["deck_order"] = c->deck_order;
    } else {
      j["leaf_space"] = "non_hausdorff";
    }
    return j;
  });
  single("cf", "continued fraction expansion", [](const foliation::Slope& s) {
    return to_json(foliation::cf_expand(s));
  });
  {
    auto* cmd = fol->add_subcommand("morita", "Morita equivalence of the rotation groupoids");
    auto alpha = slot<std::string>();
    auto beta = slot<std::string>();
    cmd->add_option("--alpha", *alpha, "slope")->required();
    cmd->add_option("--beta", *beta, "slope")->required();
    cmd->callback([&action, alpha, beta] {
      action = [alpha, beta](Tolerance) {
        Json j;
        j["equivalent"] = foliation::morita_equivalent(slope_from_text(*alpha), slope_from_text(*beta));
        return j;
      };
    });
  }
  {
    auto* cmd = fol->add_subcommand("orbit", "orbit of the rotation by alpha");
    auto z0 = slot<std::vector<double>>();
    auto alpha = slot<std::string>();
    auto max_points = slot<std::size_t>();
    *max_points = 100;
    add_complex(cmd, "--z0", z0, "RE IM");
    cmd->add_option("--alpha", *alpha, "slope")->required();
    cmd->add_option("--max", *max_points, "maximum number of points");
    cmd->callback([&action, z0, alpha, max_points] {
      action = [z0, alpha, max_points](Tolerance tol) {
        const auto points = foliation::rotation_orbit(pair_to_complex(*z0), slope_from_text(*alpha), *max_points, tol);
        Json j;
        j["count"] = points.size();
        Json list = Json::array();
        for (const auto& z : points) list.push_back(to_json(z));
        j["points"] = list;
        return j;
      };
    });
  }
}

void register_atlas(CLI::App& app, Action& action) {
  auto* atlas_cmd = app.add_subcommand("atlas", "atlas group and groupoid");
  atlas_cmd->require_subcommand(1);
  {
    auto* cmd = atlas_cmd->add_subcommand("gmul", "twisted product x * y");
    auto x = slot<std::string>();
    auto y = slot<std::string>();
    cmd->add_option("--x", *x, "{\"a\": M, \"t\": [re, im]}")->required();
    cmd->add_option("--y", *y, "{\"a\": M, \"t\": [re, im]}")->required();
    cmd->callback([&action, x, y] {
      action = [x, y](Tolerance tol) {
        return to_json(atlas::g_mul(group_element_from_json(parse_document(*x, "--x"), tol),
                                    group_element_from_json(parse_document(*y, "--y"), tol)));
      };
    });
  }
  {
    auto* cmd = atlas_cmd->add_subcommand("ginv", "group inverse");
    auto x = slot<std::string>();
    cmd->add_option("--x", *x, "{\"a\": M, \"t\": [re, im]}")->required();
    cmd->callback([&action, x] {
      action = [x](Tolerance tol) {
        return to_json(atlas::g_inverse(group_element_from_json(parse_document(*x, "--x"), tol), tol));
      };
    });
  }
  {
    auto* cmd = atlas_cmd->add_subcommand("zaction", "(p, g, m) -> (i(m)^p g, m)");
    auto structure = slot<std::string>();
    auto p = slot<std::int64_t>();
    auto g = slot<std::string>();
    auto m = slot<std::string>();
    cmd->add_option("--structure", *structure, "trivial | conjugation")->required();
    cmd->add_option("--p", *p, "integer power")->required();
    cmd->add_option("--g", *g, "group element JSON")->required();
    cmd->add_option("--m", *m, "atlas point JSON")->required();
    cmd->callback([&action, structure, p, g, m] {
      action = [structure, p, g, m](Tolerance tol) {
        const auto s = structure_named(*structure);
        const auto [g2, m2] = atlas::z_action(*p, group_element_from_json(parse_document(*g, "--g"), tol),
                                              atlas_point_from_json(parse_document(*m, "--m"), tol), s, tol);
        Json j;
        j["g"] = to_json(g2);
        j["m"] = to_json(m2);
        return j;
      };
    });
  }
  for (const std::string verb : {"source", "target"}) {
    auto* cmd = atlas_cmd->add_subcommand(verb, verb + " of the arrow (g, m)");
    auto structure = slot<std::string>();
    auto g = slot<std::string>();
    auto m = slot<std::string>();
    *structure = "trivial";
    cmd->add_option("--structure", *structure, "trivial | conjugation");
    cmd->add_option("--g", *g, "group element JSON")->required();
    cmd->add_option("--m", *m, "atlas point JSON")->required();
    cmd->callback([&action, structure, g, m, verb] {
      action = [structure, g, m, verb](Tolerance tol) {
        const auto s = structure_named(*structure);
        const auto ge = group_element_from_json(parse_document(*g, "--g"), tol);
        const auto pt = atlas_point_from_json(parse_document(*m, "--m"), tol);
        return to_json(verb == "source" ? atlas::source(ge, pt) : atlas::target(ge, pt, s));
      };
    });
  }
  {
    auto* cmd = atlas_cmd->add_subcommand("check", "randomized groupoid-law check");
    auto structure = slot<std::string>();
    auto samples = slot<std::size_t>();
    auto seed = slot<std::uint64_t>();
    *samples = 1000;
    cmd->add_option("--structure", *structure, "trivial | conjugation")->required();
    cmd->add_option("--samples", *samples, "number of random draws");
    cmd->add_option("--seed", *seed, "generator seed");
    cmd->callback([&action, structure, samples, seed] {
      action = [structure, samples, seed](Tolerance tol) {
        const auto report = atlas::groupoid_check(structure_named(*structure), *samples, *seed, tol);
        Json j;
        j["structure"] = *structure;
        j["passed"] = report.all_passed();
        Json laws = Json::array();
        for (const auto& law : report.laws) {
          Json l;
          l["name"] = law.name;
          l["passed"] = law.passed;
          l["checked"] = law.checked;
          if (!law.passed) l["counterexample"] = law.counterexample;
          laws.push_back(l);
        }
        j["laws"] = laws;
        return j;
      };
    });
  }
}

void register_fixtures(CLI::App& app, Action& action, int& exit_code) {
  auto* cmd = app.add_subcommand("fixtures", "run a directory of fixture files");
  auto dir = slot<std::string>();
  auto exact = slot<bool>();
  cmd->add_option("--dir", *dir, "fixture directory")->required();
  cmd->add_flag("--exact", *exact, "require byte-identical output");
  cmd->callback([&action, &exit_code, dir, exact] {
    action = [&exit_code, dir, exact](Tolerance tol) {
      const FixtureSummary summary = run_fixtures(*dir, tol.eps());
      using Status = FixtureResult::Status;
      Json j;
      j["fixtures"] = summary.results.size();
      j["exact"] = summary.count(Status::Exact);
      j["within_tolerance"] = summary.count(Status::WithinTolerance);
      j["failed"] = summary.count(Status::Failed);
      Json failures = Json::array();
      for (const auto& r : summary.results) {
        if (r.status == Status::Failed || (*exact && r.status == Status::WithinTolerance)) {
          Json f;
          f["name"] = r.name;
          f["detail"] = r.detail;
          failures.push_back(f);
        }
      }
      j["failures"] = failures;
      j["passed"] = summary.passed(*exact);
      if (!summary.passed(*exact)) exit_code = kExitDomainError;
      return j;
    };
  });
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
             std::optional<std::string> env_eps) {
  CLI::App app{"teichkit: Hopf surfaces, complex tori, torus foliations and the Hopf atlas groupoid", "teichkit"};
  app.require_subcommand(1);
  app.fallthrough();  // --eps is accepted after the subcommand too
  auto eps = slot<double>();
  auto* eps_opt = app.add_option("--eps", *eps, "comparison tolerance (default 1e-9, env TEICHKIT_EPS)");

  Action action;
  int exit_code = kExitOk;
  register_core(app, action);
  register_tori(app, action);
  register_hopf(app, action);
  register_teich(app, action);
  register_fol(app, action);
  register_atlas(app, action);
  register_fixtures(app, action, exit_code);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    Tolerance tol;
    try {
      if (eps_opt->count() > 0) {
        tol = Tolerance(*eps);
      } else if (env_eps && !env_eps->empty()) {
        tol = Tolerance(std::stod(*env_eps));
      }
    } catch (const std::exception&) {
      throw UsageError(std::string("tolerance must be a positive finite number (--eps or ") + kEpsEnvVar + ")");
    }
    if (!action) throw UsageError("no command given");
    const Json result = action(tol);
    out << result.dump() << '\n';
    return exit_code;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << error_document("UsageError", e.what()).dump() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << error_document("UsageError", e.what()).dump() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << error_document(to_string(e.code()), e.what()).dump() << '\n';
    return kExitDomainError;
  } catch (const nlohmann::json::exception& e) {
    err << error_document("UsageError", e.what()).dump() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << error_document("InternalError", e.what()).dump() << '\n';
    return kExitDomainError;
  }
}

}  // namespace teichkit::cli

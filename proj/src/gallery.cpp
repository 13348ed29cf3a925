#include "interlab/gallery.hpp"

#include "interlab/error.hpp"

namespace interlab::gallery {

using io::Json;

const std::vector<std::string>& names() {
  static const std::vector<std::string> kNames{"giner-pair",   "chain",   "example-2-6",
                                               "choquet-demo", "rw-demo", "shapiro-demo"};
  return kNames;
}

namespace {

SpacePtr two_units() { return std::make_shared<const MeasureSpace>(std::vector<std::string>{"a", "b"},
                                                                   std::vector<Scalar>{1, 1}); }

FnClass fn(const SpacePtr& s, std::vector<ExtReal> v) { return FnClass(s, std::move(v)); }

Json family_json(const Family& f) {
  Json j = Json::array();
  for (const auto& x : f.members) j.push_back(io::to_json(x));
  return j;
}

}  // namespace

Family giner_pair() {
  SpacePtr s = two_units();
  return Family({fn(s, {0, 1}), fn(s, {1, 0})});
}

Family chain() {
  SpacePtr s = two_units();
  return Family({fn(s, {0, 0}), fn(s, {1, 1}), fn(s, {2, 2})});
}

ChoquetDemo choquet_demo() {
  SpacePtr s = std::make_shared<const MeasureSpace>(std::vector<std::string>{"a", "b", "c"},
                                                    std::vector<Scalar>{1, 1, 1});
  // Masks: a=1, b=2, c=4.
  auto q = [](long long n) { return ExtReal(Scalar::ratio(n, 10)); };
  Capacity cap = Capacity::table(s, {0, q(2), q(3), q(6), q(4), q(7), q(5), q(10)});
  Family directed({fn(s, {2, 1, 1}), fn(s, {1, 2, 1}), fn(s, {1, 1, 0})});
  Family undirected({fn(s, {2, 0, 1}), fn(s, {0, 2, 1})});
  return {cap, directed, undirected};
}

RwDemo rw_squared_distance() {
  auto s = std::make_shared<const MeasureSpace>(std::vector<std::string>{"a", "b", "c"},
                                                std::vector<Scalar>{1, 2, Scalar::ratio(1, 2)});
  const std::vector<long long> target{0, 2, 1};
  std::vector<Control> controls{{Scalar(0)}, {Scalar(1)}, {Scalar(2)}};
  std::vector<std::vector<ExtReal>> table;
  for (long long t : target) {
    std::vector<ExtReal> row;
    for (long long u = 0; u <= 2; ++u) row.emplace_back(Scalar((u - t) * (u - t)));
    table.push_back(std::move(row));
  }
  Integrand f(s, std::move(controls), std::move(table));
  return {f, SelectionSet::full_product(3, 3)};
}

RwDemo rw_two_constants() {
  Integrand f(two_units(), {{Scalar(0)}, {Scalar(1)}}, {{0, 1}, {1, 0}});
  return {f, SelectionSet::explicit_set(2, 2, {{0, 0}, {1, 1}})};
}

ShapiroScenario shapiro_demo(bool step_of_ess_sup, std::size_t k) {
  if (k < 2) throw InputError("shapiro demo needs k >= 2");
  auto s = std::make_shared<const MeasureSpace>(std::vector<std::string>{"a", "b"},
                                                std::vector<Scalar>{Scalar::ratio(1, 2), Scalar::ratio(1, 2)});
  // Control j is 1/(j+1) for j < k, and control k is 0.
  std::vector<Control> controls;
  std::vector<ExtReal> row;
  for (std::size_t j = 0; j < k; ++j) {
    Scalar v = Scalar::ratio(1, static_cast<long long>(j) + 1);
    controls.push_back({v});
    row.emplace_back(v);
  }
  controls.push_back({Scalar(0)});
  row.emplace_back(Scalar(0));
  Integrand f(s, controls, {row, row});
  std::vector<Selection> seq;
  for (std::size_t n = 0; n < k; ++n) seq.push_back({n, n});
  Functional phi = step_of_ess_sup ? post_compose(ess_sup_functional(), ScalarMap::step(ExtReal(0)))
                                   : extended_lebesgue_functional();
  return ShapiroScenario{phi, Scalar(1), f, SelectionSet::full_product(2, k + 1), seq, std::nullopt, {}};
}

namespace {

Json interchange_case(const Family& family, const Functional& phi, const io::RunOptions& options) {
  Json j;
  j["family"] = family_json(family);
  j["inf_directed"] = io::to_json(is_inf_directed(family));
  j["report"] = io::to_json(verify_interchange(family, phi, options.interchange()));
  return j;
}

Json example_2_6(const io::RunOptions& options) {
  const std::size_t prefix = options.prefix.value_or(100);
  SequenceSpec seq = io::example_2_6_sequence(prefix);
  seq.divergence_threshold = options.divergence_threshold;
  const Functional phi = extended_lebesgue_functional();
  Json j;
  j["sequence"] = io::to_json(verify_interchange_sequence(seq, phi, options.interchange()));
  const Family literal = io::example_2_6_family(5);
  Json lit;
  lit["N"] = 5;
  lit["inf_directed"] = io::to_json(is_inf_directed(literal));
  lit["report"] = io::to_json(verify_interchange(literal, phi, options.interchange()));
  j["literal_truncation"] = lit;
  return j;
}

Json rw_case(const RwDemo& d, const io::RunOptions& options) {
  RwOptions o;
  o.tolerance = options.effective_tolerance();
  Json j;
  j["integrand"] = io::to_json(d.integrand);
  j["selections"] = io::to_json(d.selections);
  RwReport rw = verify_rw_interchange(d.integrand, d.selections, o);
  j["interchange"] = io::to_json(rw);
  if (rw.decomposable.decomposable) j["argmin"] = io::to_json(verify_rw_argmin(d.integrand, d.selections, o));
  return j;
}

Json shapiro_case(ShapiroScenario sc, const io::RunOptions& options) {
  sc.options.tolerance = options.effective_tolerance();
  Json j;
  j["functional"] = sc.phi.name();
  j["report"] = io::to_json(verify_shapiro(sc));
  return j;
}

}  // namespace

Json run(const std::string& name, const io::RunOptions& options) {
  Json out;
  out["gallery"] = name;
  if (name == "giner-pair") {
    out["result"] = interchange_case(giner_pair(), extended_lebesgue_functional(), options);
    const Family pair = giner_pair();
    out["result"]["gap_form"] = io::to_json(is_gap_inf_directed(pair, options.interchange().directed));
  } else if (name == "chain") {
    out["result"] = interchange_case(chain(), extended_lebesgue_functional(), options);
  } else if (name == "example-2-6") {
    out["result"] = example_2_6(options);
  } else if (name == "choquet-demo") {
    ChoquetDemo d = choquet_demo();
    const Functional phi = choquet_functional(d.capacity);
    out["capacity"] = io::to_json(d.capacity);
    out["result"]["directed"] = interchange_case(d.directed, phi, options);
    out["result"]["undirected"] = interchange_case(d.undirected, phi, options);
  } else if (name == "rw-demo") {
    out["result"]["squared_distance"] = rw_case(rw_squared_distance(), options);
    out["result"]["two_constants"] = rw_case(rw_two_constants(), options);
  } else if (name == "shapiro-demo") {
    out["result"]["expectation"] = shapiro_case(shapiro_demo(false), options);
    out["result"]["step_of_ess_sup"] = shapiro_case(shapiro_demo(true), options);
  } else {
    throw InputError("unknown gallery example '" + name + "'");
  }
  out["environment"] = io::environment(options);
  return out;
}

}  // namespace interlab::gallery

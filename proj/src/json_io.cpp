#include "semirds/json_io.hpp"

#include "semirds/error.hpp"

namespace semirds {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object with key '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing key '") + key + "'");
  return *it;
}

std::int64_t get_int(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("'") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

bool get_bool(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_boolean()) bad(std::string("'") + key + "' must be a boolean");
  return v.get<bool>();
}

std::string get_string(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) bad(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<std::int64_t> int_list(const Json& j) {
  if (!j.is_array()) bad("expected an integer array");
  std::vector<std::int64_t> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) bad("expected an integer array");
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

const Json& array(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) bad(std::string("'") + key + "' must be an array");
  return v;
}

}  // namespace

Json bigint_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    BigInt v;
    if (v.set_str(j.get<std::string>(), 10) != 0) bad("not a decimal integer: " + j.get<std::string>());
    return v;
  }
  bad("expected an integer or a decimal string");
}

Json field_to_json(const FieldCtx& k) {
  Json j;
  j["p"] = k.characteristic();
  j["n"] = k.degree();
  j["modulus"] = k.modulus();
  return j;
}

FieldCtx field_from_json(const Json& j) {
  std::optional<std::vector<std::int64_t>> modulus;
  if (j.is_object() && j.contains("modulus")) modulus = int_list(j["modulus"]);
  return FieldCtx::create(get_int(j, "p"), static_cast<int>(get_int(j, "n")), modulus);
}

Json field_elem_to_json(const FieldElem& a) { return Json(a.coeffs); }

FieldElem field_elem_from_json(const FieldCtx& k, const Json& j) {
  if (j.is_number_integer()) return k.from_int(j.get<std::int64_t>());
  const auto c = int_list(j);
  if (std::cmp_not_equal(c.size(), k.degree())) bad("field element needs " + std::to_string(k.degree()) + " coordinates");
  for (const auto v : c) {
    if (v < 0 || v >= static_cast<std::int64_t>(k.characteristic())) bad("field coordinate out of range");
  }
  return k.from_coeffs(c);
}

Json cycint_to_json(const CycInt& a) {
  Json j;
  j["L"] = a.order();
  Json c = Json::array();
  for (const auto& v : a.coeffs()) c.push_back(bigint_to_json(v));
  j["coeffs"] = c;
  return j;
}

CycInt cycint_from_json(const Json& j) {
  const auto order = get_int(j, "L");
  if (order < 1 || order > 100000) bad("L out of range");
  std::vector<BigInt> c;
  for (const auto& v : array(j, "coeffs")) c.push_back(bigint_from_json(v));
  return CycInt::from_coeffs(static_cast<int>(order), c);
}

Json spec_to_json(const GroupSpec& spec) {
  Json j;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, AbelianSpec>) {
          j["kind"] = "abelian";
          j["factors"] = s.factors;
        } else if constexpr (std::is_same_v<T, SemidirectSpec>) {
          j["kind"] = "semidirect2p2";
          j["p"] = s.p;
          j["sign_a"] = s.sign_a;
          j["sign_b"] = s.sign_b;
        } else if constexpr (std::is_same_v<T, DihedralSpec>) {
          j["kind"] = "dihedral";
          j["rotations"] = s.rotations;
        } else {
          j["kind"] = "quartic";
          j["field"] = field_to_json(s.field);
          j["e"] = field_elem_to_json(s.e);
          j["f"] = field_elem_to_json(s.f);
        }
      },
      spec);
  return j;
}

GroupSpec spec_from_json(const Json& j) {
  const std::string kind = get_string(j, "kind");
  if (kind == "abelian") return AbelianSpec{int_list(field(j, "factors"))};
  if (kind == "semidirect2p2") {
    return SemidirectSpec{get_int(j, "p"), static_cast<int>(get_int(j, "sign_a")), static_cast<int>(get_int(j, "sign_b"))};
  }
  if (kind == "dihedral") return DihedralSpec{get_int(j, "rotations")};
  if (kind == "quartic") {
    FieldCtx k = field_from_json(field(j, "field"));
    FieldElem e = field_elem_from_json(k, field(j, "e"));
    FieldElem f = field_elem_from_json(k, field(j, "f"));
    return QuarticSpec{std::move(k), std::move(e), std::move(f)};
  }
  bad("unknown group kind '" + kind + "'");
}

Json elem_to_json(const Group& g, GroupElem x) { return Json(g.coords(x)); }

GroupElem elem_from_json(const Group& g, const Json& j) {
  const auto c = int_list(j);
  if (c.size() != g.arity()) bad("element needs " + std::to_string(g.arity()) + " coordinates");
  const GroupElem x = g.from_coords(c);
  if (g.coords(x) != c) bad("element coordinate out of range");
  return x;
}

Json elems_to_json(const Group& g, const std::vector<GroupElem>& xs) {
  Json a = Json::array();
  for (const auto x : xs) a.push_back(elem_to_json(g, x));
  return a;
}

std::vector<GroupElem> elems_from_json(const Group& g, const Json& j) {
  if (!j.is_array()) bad("expected an array of elements");
  std::vector<GroupElem> out;
  for (const auto& v : j) out.push_back(elem_from_json(g, v));
  return out;
}

Json params_to_json(const RdsParams& p) {
  Json j;
  j["m"] = p.m;
  j["n"] = p.n;
  j["k"] = p.k;
  j["lambda"] = p.lambda;
  return j;
}

RdsParams params_from_json(const Json& j) {
  return RdsParams{get_int(j, "m"), get_int(j, "n"), get_int(j, "k"), get_int(j, "lambda")};
}

Json rds_to_json(const RdsInstance& inst) {
  Json j;
  j["group"] = spec_to_json(inst.group.spec());
  j["N"] = elems_to_json(inst.group, inst.n_gens);
  j["R"] = elems_to_json(inst.group, inst.r);
  j["params"] = params_to_json(inst.params);
  return j;
}

RdsInstance rds_from_json(const Json& j) {
  Group g(spec_from_json(field(j, "group")));
  auto n = elems_from_json(g, field(j, "N"));
  auto r = elems_from_json(g, field(j, "R"));
  return RdsInstance{std::move(g), std::move(n), std::move(r), params_from_json(field(j, "params"))};
}

Json brute_to_json(const Group& g, const BruteVerdict& v) {
  Json j;
  j["valid"] = v.valid;
  if (!v.valid) {
    j["witness"] = elem_to_json(g, v.witness);
    j["expected"] = v.expected;
    j["actual"] = v.actual;
  }
  return j;
}

BruteVerdict brute_from_json(const Group& g, const Json& j) {
  BruteVerdict v;
  v.valid = get_bool(j, "valid");
  if (!v.valid) {
    v.witness = elem_from_json(g, field(j, "witness"));
    v.expected = get_int(j, "expected");
    v.actual = get_int(j, "actual");
  }
  return v;
}

Json char_verdict_to_json(const CharVerdict& v) {
  Json j;
  j["valid"] = v.valid;
  if (!v.valid) {
    j["character"] = v.character;
    j["expected"] = bigint_to_json(v.expected);
    j["actual"] = v.actual ? bigint_to_json(*v.actual) : Json(nullptr);
  }
  return j;
}

CharVerdict char_verdict_from_json(const Json& j) {
  CharVerdict v;
  v.valid = get_bool(j, "valid");
  if (!v.valid) {
    v.character = int_list(field(j, "character"));
    v.expected = bigint_from_json(field(j, "expected"));
    const Json& a = field(j, "actual");
    if (!a.is_null()) v.actual = bigint_from_json(a);
  }
  return v;
}

Json mub_to_json(const MubFamily& fam) {
  Json j;
  j["m"] = fam.m;
  j["L"] = fam.L;
  Json bases = Json::array();
  for (const auto& b : fam.bases) {
    Json jb;
    jb["label"] = b.label;
    jb["standard"] = b.standard;
    Json vecs = Json::array();
    for (const auto& v : b.vectors) {
      Json jv = Json::array();
      for (const auto& x : v) jv.push_back(cycint_to_json(x)["coeffs"]);
      vecs.push_back(std::move(jv));
    }
    jb["vectors"] = std::move(vecs);
    bases.push_back(std::move(jb));
  }
  j["bases"] = std::move(bases);
  return j;
}

MubFamily mub_from_json(const Json& j) {
  MubFamily fam;
  fam.m = get_int(j, "m");
  const auto order = get_int(j, "L");
  if (order < 1 || order > 100000) bad("L out of range");
  fam.L = static_cast<int>(order);
  for (const auto& jb : array(j, "bases")) {
    MubBasis b;
    b.label = get_string(jb, "label");
    b.standard = get_bool(jb, "standard");
    for (const auto& jv : array(jb, "vectors")) {
      if (!jv.is_array()) bad("vector must be an array");
      std::vector<CycInt> v;
      for (const auto& x : jv) {
        Json c;
        c["L"] = fam.L;
        c["coeffs"] = x;
        v.push_back(cycint_from_json(c));
      }
      b.vectors.push_back(std::move(v));
    }
    fam.bases.push_back(std::move(b));
  }
  return fam;
}

Json mub_verdict_to_json(const MubVerdict& v) {
  Json j;
  j["valid"] = v.valid;
  if (v.valid) j["a_squared"] = "1/" + std::to_string(v.a_squared_denominator);
  if (v.witness) {
    const auto& w = *v.witness;
    j["witness"] = Json{{"basis_a", w.basis_a}, {"vector_a", w.vector_a}, {"basis_b", w.basis_b},
                        {"vector_b", w.vector_b}, {"reason", w.reason}};
  }
  return j;
}

MubVerdict mub_verdict_from_json(const Json& j) {
  MubVerdict v;
  v.valid = get_bool(j, "valid");
  if (v.valid) {
    const std::string a = get_string(j, "a_squared");
    if (a.rfind("1/", 0) != 0) bad("a_squared must read 1/m");
    try {
      v.a_squared_denominator = std::stoll(a.substr(2));
    } catch (const std::exception&) {
      bad("a_squared must read 1/m");
    }
  }
  if (j.contains("witness")) {
    const Json& w = j["witness"];
    auto idx = [&](const char* key) { return static_cast<std::size_t>(get_int(w, key)); };
    v.witness = MubWitness{idx("basis_a"), idx("vector_a"), idx("basis_b"), idx("vector_b"), get_string(w, "reason")};
  }
  return v;
}

Json mub_float_to_json(const MubFamily& fam) {
  Json out = Json::array();
  for (const auto& basis : mub_to_float(fam)) {
    Json jb = Json::array();
    for (const auto& vec : basis) {
      Json jv = Json::array();
      for (const auto& z : vec) jv.push_back(Json::array({z.real(), z.imag()}));
      jb.push_back(std::move(jv));
    }
    out.push_back(std::move(jb));
  }
  return out;
}

Json pfunction_to_json(const PFunction& f) {
  Json j;
  j["p"] = f.p;
  j["table"] = f.table;
  return j;
}

PFunction pfunction_from_json(const Json& j) { return PFunction::make(get_int(j, "p"), int_list(field(j, "table"))); }

Json hou_to_json(std::int64_t p, const HouResult& r) {
  Json j;
  j["p"] = p;
  j["checked"] = r.checked;
  j["confirmed"] = r.confirmed;
  j["counterexample"] = r.counterexample ? pfunction_to_json(*r.counterexample) : Json(nullptr);
  return j;
}

HouResult hou_from_json(const Json& j) {
  HouResult r;
  r.checked = static_cast<std::uint64_t>(get_int(j, "checked"));
  r.confirmed = get_bool(j, "confirmed");
  const Json& c = field(j, "counterexample");
  if (!c.is_null()) r.counterexample = pfunction_from_json(c);
  return r;
}

Json lemma14_to_json(const Lemma14Verdict& v) {
  Json j;
  j["pass"] = v.pass;
  j["centralizer_exponent"] = v.centralizer_exponent;
  j["reason"] = v.reason;
  return j;
}

Lemma14Verdict lemma14_from_json(const Json& j) {
  return Lemma14Verdict{get_bool(j, "pass"), get_int(j, "centralizer_exponent"), get_string(j, "reason")};
}

Json search_to_json(const SearchTask& task, const SearchResult& r, bool timing) {
  const Group& g = task.group;
  Json j;
  j["group"] = spec_to_json(g.spec());
  j["N"] = elems_to_json(g, task.n_gens);
  j["params"] = params_to_json(r.params);
  j["normalize"] = task.options.normalize;
  j["prune"] = task.options.prune;
  j["limit"] = task.options.limit;
  j["count"] = r.solutions.size();
  j["nodes"] = r.nodes;
  Json sols = Json::array();
  for (const auto& s : r.solutions) sols.push_back(elems_to_json(g, s));
  j["solutions"] = std::move(sols);
  if (timing) j["seconds"] = r.seconds;
  return j;
}

SearchResult search_from_json(const Json& j, SearchTask* task) {
  Group g(spec_from_json(field(j, "group")));
  SearchResult r;
  r.params = params_from_json(field(j, "params"));
  r.nodes = static_cast<std::uint64_t>(get_int(j, "nodes"));
  for (const auto& s : array(j, "solutions")) r.solutions.push_back(elems_from_json(g, s));
  if (std::cmp_not_equal(r.solutions.size(), get_int(j, "count"))) bad("count does not match the solution list");
  if (j.contains("seconds")) r.seconds = j["seconds"].get<double>();
  if (task != nullptr) {
    SearchOptions opt;
    opt.normalize = get_bool(j, "normalize");
    opt.prune = get_bool(j, "prune");
    opt.limit = static_cast<std::uint64_t>(get_int(j, "limit"));
    auto n = elems_from_json(g, field(j, "N"));
    *task = SearchTask{std::move(g), std::move(n), r.params.lambda, opt};
  }
  return r;
}

Json sweep_to_json(const SweepReport& r) {
  Json j;
  j["family"] = r.family == Family::TwoP2 ? "2p2" : "4p2";
  j["p"] = r.p;
  j["params"] = params_to_json(r.params);
  j["confirmed"] = r.confirmed;
  Json cases = Json::array();
  for (const auto& c : r.cases) {
    const Group g(c.spec);
    Json jc;
    jc["group"] = c.group;
    jc["spec"] = spec_to_json(c.spec);
    jc["N"] = elems_to_json(g, c.n_gens);
    jc["normal"] = c.normal;
    jc["lemma14"] = c.lemma14;
    jc["searched"] = c.searched;
    jc["count"] = c.count;
    jc["nodes"] = c.nodes;
    jc["example"] = c.example.empty() ? Json(nullptr) : elems_to_json(g, c.example);
    cases.push_back(std::move(jc));
  }
  j["cases"] = std::move(cases);
  return j;
}

SweepReport sweep_from_json(const Json& j) {
  SweepReport r;
  const std::string family = get_string(j, "family");
  if (family != "2p2" && family != "4p2") bad("family must be 2p2 or 4p2");
  r.family = family == "2p2" ? Family::TwoP2 : Family::FourP2;
  r.p = get_int(j, "p");
  r.params = params_from_json(field(j, "params"));
  r.confirmed = get_bool(j, "confirmed");
  for (const auto& jc : array(j, "cases")) {
    SweepCase c;
    c.group = get_string(jc, "group");
    c.spec = spec_from_json(field(jc, "spec"));
    const Group g(c.spec);
    c.n_gens = elems_from_json(g, field(jc, "N"));
    c.normal = get_bool(jc, "normal");
    c.lemma14 = get_string(jc, "lemma14");
    c.searched = get_bool(jc, "searched");
    c.count = static_cast<std::uint64_t>(get_int(jc, "count"));
    c.nodes = static_cast<std::uint64_t>(get_int(jc, "nodes"));
    const Json& ex = field(jc, "example");
    if (!ex.is_null()) c.example = elems_from_json(g, ex);
    r.cases.push_back(std::move(c));
  }
  return r;
}

}  // namespace semirds

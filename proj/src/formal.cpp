#include "stabsys/formal.hpp"

#include "stabsys/bounds.hpp"
#include "stabsys/parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace stabsys {

namespace {

ClassVector class_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 3)
    throw FixtureError("fixture: class must be a [n,d,k] array");
  return ClassVector{Int(j[0].get<long long>()), Int(j[1].get<long long>()),
                     Int(j[2].get<long long>())};
}

}  // namespace

FormalCategory FormalCategory::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FixtureError(std::string("fixture: invalid JSON: ") + e.what());
  }
  FormalCategory cat;
  for (const auto& jo : j.value("objects", nlohmann::json::array())) {
    FormalObject obj;
    obj.id = jo.at("id").get<std::string>();
    obj.cls = class_from_json(jo.at("class"));
    for (const auto& s : jo.value("subobjects", nlohmann::json::array()))
      obj.subobjects.push_back(s.get<std::string>());
    for (const auto& s : jo.value("base_points", nlohmann::json::array()))
      obj.base_points.push_back(s.get<std::string>());
    obj.complete = jo.value("complete", false);
    obj.injective = jo.value("injective", false);
    if (jo.contains("mu_alpha_stable")) obj.mu_alpha_stable = jo["mu_alpha_stable"].get<bool>();
    if (jo.contains("delta_min_quotient_slope"))
      obj.delta_min_quotient_slope = parse_rational(jo["delta_min_quotient_slope"].get<std::string>());
    cat.add_object(std::move(obj));
  }
  for (const auto& je : j.value("elementary", nlohmann::json::array())) {
    ElementaryEdge edge;
    edge.from = je.at("from").get<std::string>();
    edge.to = je.at("to").get<std::string>();
    edge.along = class_from_json(je.at("along"));
    if (je.contains("psi1_nonzero")) edge.psi1_nonzero = je["psi1_nonzero"].get<bool>();
    cat.add_elementary(std::move(edge));
  }
  for (const auto& jm : j.value("morphisms", nlohmann::json::array()))
    cat.add_morphism({class_from_json(jm.at("from")), class_from_json(jm.at("to"))});
  cat.validate();
  return cat;
}

FormalCategory FormalCategory::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FixtureError("fixture: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

void FormalCategory::add_object(FormalObject obj) {
  if (objects_.count(obj.id)) throw FixtureError("fixture: duplicate id " + obj.id);
  objects_.emplace(obj.id, std::move(obj));
  validated_ = false;
}

void FormalCategory::add_elementary(ElementaryEdge edge) {
  elementary_.push_back(std::move(edge));
  validated_ = false;
}

void FormalCategory::add_morphism(MorphismWitness m) { morphisms_.push_back(std::move(m)); }

void FormalCategory::validate() {
  warnings_.clear();
  below_.clear();
  for (const auto& [id, obj] : objects_) {
    if (obj.cls.n < 0 || obj.cls.k < 0)
      throw FixtureError("fixture: object " + id + " has negative n or k");
    if (obj.cls.n == 0 && obj.cls.d < 0)
      throw FixtureError("fixture: torsion object " + id + " has negative degree");
    for (const auto& sub : obj.subobjects) {
      if (!objects_.count(sub))
        throw FixtureError("fixture: " + id + " references missing subobject " + sub);
      const FormalObject& s = objects_.at(sub);
      const ClassVector quot = obj.cls - s.cls;
      if (quot.n < 0 || quot.k < 0)
        throw FixtureError("fixture: quotient class of " + id + "/" + sub +
                           " has negative n or k");
      if (quot.n == 0 && quot.d < 0)
        throw FixtureError("fixture: quotient class of " + id + "/" + sub +
                           " is torsion of negative degree");
      // Purity surrogate: a subsystem of a pure system is pure, so an
      // injective positive-rank parent admits no torsion subobject class.
      if (obj.injective && obj.cls.n > 0 && s.cls.n == 0 && !s.cls.is_zero())
        warnings_.push_back("purity: torsion subobject " + sub + " under pure " + id);
    }
  }
  for (const auto& e : elementary_) {
    if (!objects_.count(e.from) || !objects_.count(e.to))
      throw FixtureError("fixture: elementary edge references missing object");
  }

  // Transitive closure with cycle detection (DFS, three-color).
  std::map<std::string, int> color;
  std::function<void(const std::string&)> visit = [&](const std::string& id) {
    color[id] = 1;
    auto& below = below_[id];
    for (const auto& sub : objects_.at(id).subobjects) {
      if (color[sub] == 1) throw FixtureError("fixture: subobject cycle through " + sub);
      if (color[sub] == 0) visit(sub);
      below.insert(sub);
      const auto& deeper = below_[sub];
      below.insert(deeper.begin(), deeper.end());
    }
    color[id] = 2;
  };
  for (const auto& [id, obj] : objects_)
    if (color[id] == 0) visit(id);
  validated_ = true;
}

void FormalCategory::require_validated() const {
  if (!validated_) throw FixtureError("fixture: validate() must run before queries");
}

const FormalObject& FormalCategory::object(const std::string& id) const {
  auto it = objects_.find(id);
  if (it == objects_.end()) throw FixtureError("fixture: no object " + id);
  return it->second;
}

bool FormalCategory::leq(const std::string& inner, const std::string& outer) const {
  require_validated();
  if (inner == outer) return true;
  auto it = below_.find(outer);
  return it != below_.end() && it->second.count(inner) > 0;
}

HNFiltration hn_filtration(const FormalCategory& cat, const std::string& id,
                           const Rational& alpha) {
  const FormalObject& top = cat.object(id);
  HNFiltration result;
  result.total = top.cls;

  // Walk up the lattice: at each step the current quotient is top/base and
  // its subobjects are the interval (base, top].
  std::optional<std::string> base;
  while (!base || *base != id) {
    const ClassVector base_cls = base ? cat.object(*base).cls : ClassVector{};
    std::optional<std::string> best;
    ClassVector best_cls;
    SlopeValue best_slope;
    bool best_is_whole = false;

    auto consider = [&](const std::string& cand_id) {
      const ClassVector quot = cat.object(cand_id).cls - base_cls;
      if (quot.is_zero()) return;
      const SlopeValue s = mu_alpha(quot, alpha);
      const bool is_whole = cand_id == id;
      if (best) {
        if (s < best_slope) return;
        if (s == best_slope) {
          if (quot.n < best_cls.n) return;
          if (quot.n == best_cls.n) {
            if (quot.d < best_cls.d) return;
            if (quot.d == best_cls.d) {
              // Full tie on (slope, n, d): prefer the whole object, so that
              // semistable objects collapse to a single factor; otherwise
              // smallest id.
              if (!is_whole && (best_is_whole || cand_id >= *best)) return;
            }
          }
        }
      }
      best = cand_id;
      best_cls = quot;
      best_slope = s;
      best_is_whole = is_whole;
    };

    consider(id);
    for (const auto& [cand_id, cand] : cat.objects()) {
      if (cand_id == id) continue;
      if (!cat.leq(cand_id, id)) continue;
      if (base && !(cat.leq(*base, cand_id) && cand_id != *base)) continue;
      consider(cand_id);
    }
    if (!best) throw FixtureError("hn_filtration: empty step above " + (base ? *base : "0"));

    if (!result.factors.empty() && !(best_slope < result.factors.back().slope))
      throw FixtureError("hn_filtration: factor slopes fail to decrease at " + *best);
    result.factors.push_back({best_cls, best_slope, *best});
    base = best;
  }
  return result;
}

TiltClass tilt_classify(const HNFiltration& factors, const Rational& beta) {
  const SlopeValue cut{beta};
  bool any_torsion = false, any_free = false;
  for (const auto& f : factors.factors) {
    (f.slope > cut ? any_torsion : any_free) = true;
  }
  if (any_torsion && any_free) return TiltClass::Mixed;
  return any_free ? TiltClass::Free : TiltClass::Torsion;
}

std::pair<ClassVector, ClassVector> torsion_pair_split(const FormalCategory& cat,
                                                       const std::string& id,
                                                       const Rational& alpha,
                                                       const Rational& beta) {
  const HNFiltration hn = hn_filtration(cat, id, alpha);
  const SlopeValue cut{beta};
  ClassVector t_cls, f_cls;
  for (const auto& f : hn.factors) {
    if (f.slope > cut)
      t_cls = t_cls + f.cls;
    else
      f_cls = f_cls + f.cls;
  }
  return {t_cls, f_cls};
}

std::vector<MinimalPattern> minimal_objects() {
  return {{ClassVector{0, 1, 0}, "point"}, {ClassVector{0, 0, 1}, "vector_space"}};
}

std::vector<ElementaryMove> elementary_transformations(const FormalCategory& cat,
                                                       const std::string& id) {
  const FormalObject& obj = cat.object(id);
  std::vector<ElementaryMove> moves;
  std::vector<std::string> points = obj.base_points;
  std::sort(points.begin(), points.end());
  for (const auto& p : points)
    moves.push_back({ElementaryType::I, ClassVector{obj.cls.n, obj.cls.d - 1, obj.cls.k}, p});
  if (obj.cls.k > 0)
    moves.push_back({ElementaryType::II, ClassVector{obj.cls.n, obj.cls.d, obj.cls.k - 1}, ""});
  return moves;
}

TransferResult hn_transfer_check(const FormalCategory& cat, const std::string& x_id,
                                 const std::string& xprime_id,
                                 const ClassVector& s_class, const Rational& alpha) {
  const ElementaryEdge* edge = nullptr;
  for (const auto& e : cat.elementary()) {
    if (e.from == x_id && e.to == xprime_id && e.along == s_class) {
      edge = &e;
      break;
    }
  }
  if (!edge)
    return {TransferOutcome::PreconditionViolated,
            "no recorded elementary transformation " + x_id + " -> " + xprime_id};
  if (cat.object(xprime_id).cls != cat.object(x_id).cls - s_class)
    return {TransferOutcome::PreconditionViolated, "class bookkeeping mismatch on " + xprime_id};

  const HNFiltration hn_x = hn_filtration(cat, x_id, alpha);
  if (hn_x.factors.size() < 2)
    return {TransferOutcome::PreconditionViolated, x_id + " is semistable"};

  if (!edge->psi1_nonzero.has_value())
    return {TransferOutcome::Inconclusive, "fixture lacks the psi1 marker"};
  if (!*edge->psi1_nonzero)
    return {TransferOutcome::Inconclusive, "psi1 = 0: check skipped"};

  const HNFiltration hn_xp = hn_filtration(cat, xprime_id, alpha);
  if (hn_xp.factors.size() != hn_x.factors.size())
    return {TransferOutcome::Fail, "filtration lengths differ"};
  if (hn_xp.factors[0].cls != hn_x.factors[0].cls - s_class)
    return {TransferOutcome::Fail, "first factor does not absorb the minimal class"};
  for (std::size_t i = 1; i < hn_x.factors.size(); ++i)
    if (hn_xp.factors[i].cls != hn_x.factors[i].cls)
      return {TransferOutcome::Fail, "factor " + std::to_string(i + 1) + " differs"};
  return {TransferOutcome::Pass, ""};
}

ClassVector signed_class(const TiltedRep& rep, const FormalCategory& cat) {
  ClassVector total;
  if (rep.t_part) total = total + cat.object(*rep.t_part).cls;
  if (rep.f_part) total = total - cat.object(*rep.f_part).cls;
  return total;
}

bool heart_member(const TiltedRep& rep, const FormalCategory& cat,
                  const Rational& alpha, const Rational& beta) {
  if (rep.f_part) {
    if (tilt_classify(hn_filtration(cat, *rep.f_part, alpha), beta) != TiltClass::Free)
      return false;
  }
  if (rep.t_part) {
    if (tilt_classify(hn_filtration(cat, *rep.t_part, alpha), beta) != TiltClass::Torsion)
      return false;
  }
  return true;
}

MinimalConstraintSystem destabilizer_constraints_minimal(MinimalKind kind,
                                                         const Rational& alpha,
                                                         const Rational& beta,
                                                         const Rational& gamma) {
  MinimalConstraintSystem sys;
  sys.kind = kind;
  sys.alpha = alpha;
  sys.beta = beta;
  sys.gamma = gamma;
  sys.target = kind == MinimalKind::OP ? ClassVector{0, 1, 0} : ClassVector{0, 0, 1};
  return sys;
}

bool MinimalConstraintSystem::contains(const ClassVector& c) const {
  if (c.n < 1 || c.k < 0) return false;
  if (c.k < target.k) return false;  // quotient needs k >= 0
  const Rational lhs = Rational(c.d - target.d) + alpha * (c.k - target.k);
  const Rational mid = beta * c.n;
  const Rational rhs = Rational(c.d) + alpha * c.k;
  if (!(lhs <= mid && mid < rhs)) return false;  // elementary window
  if (kind == MinimalKind::OP) {
    // strict violation of k(alpha+1) <= n(beta+gamma)
    if (!(Rational(c.k) * (alpha + 1) > Rational(c.n) * (beta + gamma))) return false;
  } else {
    // strict violation of n(beta - alpha gamma) <= d(alpha+1)
    if (!(Rational(c.n) * (beta - alpha * gamma) > Rational(c.d) * (alpha + 1))) return false;
  }
  return admissible_semistable(c, alpha);
}

std::vector<std::string> MinimalConstraintSystem::describe() const {
  std::vector<std::string> out;
  const std::string a = to_string(alpha), b = to_string(beta), g = to_string(gamma);
  if (kind == MinimalKind::OP) {
    out.push_back("d - 1 + " + a + "*k <= " + b + "*n < d + " + a + "*k");
    out.push_back("(" + a + " + 1)*k > (" + b + " + " + g + ")*n");
  } else {
    out.push_back("d + " + a + "*(k - 1) <= " + b + "*n < d + " + a + "*k");
    out.push_back("(" + b + " - " + a + "*" + g + ")*n > (" + a + " + 1)*d");
    out.push_back("k >= 1");
  }
  out.push_back("n >= 1");
  out.push_back("d >= 0 if k > 0");
  out.push_back("k <= d + n if n > 0, k > 0, d >= 0");
  return out;
}

std::vector<ClassVector> scan_minimal_constraints(const MinimalConstraintSystem& sys,
                                                  long long bound, int workers) {
  if (bound < 1) throw std::domain_error("scan: bound must be >= 1");
  const int nworkers = worker_count(workers);
  std::vector<std::vector<ClassVector>> slices(nworkers);
  parallel_slices(1, bound + 1, nworkers, [&](long long lo, long long hi, long long w) {
    auto& out = slices[static_cast<std::size_t>(w)];
    for (long long n = lo; n < hi; ++n)
      for (long long d = -bound; d <= bound; ++d)
        for (long long k = 0; k <= bound; ++k) {
          const ClassVector c{n, d, k};
          if (sys.contains(c)) out.push_back(c);
        }
  });
  std::vector<ClassVector> result;
  for (auto& s : slices) result.insert(result.end(), s.begin(), s.end());
  return result;
}

}  // namespace stabsys

#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "subn/harness.hpp"

namespace subn {

namespace {

std::string predicted_text(Prediction const &p)
{
  if (p.order == 0)
    return p.picky ? "N" : "?";
  return (p.order_exact ? "" : "~") + p.order.str();
}

struct Judgement
{
  bool ok = false;
  std::string note;
};

Judgement judge(Prediction const &p, Integer const &computed, bool picky,
                Integer const &group_order)
{
  if (p.whole_group)
    return {computed == group_order, ""};
  if (p.picky) {
    if (!picky)
      return {false, "predicted picky"};
    if (p.order_exact && p.order != computed)
      return {false, "picky order differs"};
    return {true, ""};
  }
  if (p.order_exact)
    return {p.order == computed, ""};
  // index left to resolve: the concrete order must divide the similitude-level one
  if (p.order != 0 && computed != 0 && p.order % computed == 0 && p.order / computed <= 2)
    return {true, "index-resolved:" + Integer(p.order / computed).str()};
  return {false, "unresolved index"};
}

void apply(ReportRow &row, std::vector<Prediction> const &preds, Integer const &group_order)
{
  std::string tags, orders, notes;
  bool ok = false;
  for (auto const &p : preds) {
    tags += (tags.empty() ? "" : "|") + p.case_tag;
    orders += (orders.empty() ? "" : "|") + predicted_text(p);
    Judgement j = judge(p, row.computed, row.picky, group_order);
    if (j.ok && !ok) {
      ok = true;
      notes = j.note;
    } else if (!ok && !j.note.empty()) {
      notes = j.note;
    }
  }
  row.case_tag = tags;
  row.predicted = orders;
  row.verdict = ok ? Verdict::match : Verdict::mismatch;
  if (!notes.empty())
    row.reason = row.reason.empty() ? notes : row.reason + ";" + notes;
}

std::string skip_reason(std::exception const &e)
{
  if (dynamic_cast<CeilingError const *>(&e))
    return std::string("ceiling:") + e.what();
  if (dynamic_cast<UnsupportedError const *>(&e))
    return std::string("unsupported:") + e.what();
  if (dynamic_cast<RefusalError const *>(&e))
    return std::string("hypothesis-violated:") + e.what();
  return std::string("error:") + e.what();
}

unsigned count_cycles(Perm const &x, unsigned len)
{
  unsigned k = 0;
  for (unsigned c : x.cycle_type())
    k += c == len;
  return k;
}

// the Levi shape of a classical centraliser, by order; ties are broken by
// the fixed space of x when its matrix is known
std::optional<LeviShape> match_shape(GroupSpec const &spec, unsigned d, Integer const &c_order,
                                     std::optional<unsigned> fixed_dim, std::string &reason)
{
  std::vector<LeviShape> hits;
  for (auto const &le : dsplit_levis(spec, d))
    if (levi_order_in_group(spec, le) == c_order)
      hits.push_back(le.shape);
  if (hits.size() > 1 && fixed_dim) {
    std::vector<LeviShape> keep;
    for (auto const &h : hits)
      if (shape_fixed_dimension(spec, h) == *fixed_dim)
        keep.push_back(h);
    hits = keep;
  }
  if (hits.size() == 1) {
    LeviShape h = hits.front();
    // with e = 1 a one-dimensional GL_s or GU_s block is a torus factor
    bool linear = spec.family == Family::SL || spec.family == Family::SU ||
                  spec.family == Family::GL || spec.family == Family::GU;
    if (linear && h.s == 1 && torus_decomposition(spec, d).e == 1) {
      h.parts.push_back(1);
      h.s = 0;
    }
    return h;
  }
  if (hits.empty())
    reason = "no-shape:centraliser order matches no d-split Levi";
  else {
    reason = "ambiguous-shape:";
    for (auto const &s : hits)
      reason += s.str();
  }
  return std::nullopt;
}

// dim ker(M - 1)
unsigned fixed_dimension(Matrix m)
{
  auto const &f = *m.field();
  for (unsigned i = 0; i < m.dim(); ++i)
    m(i, i) = f.sub(m(i, i), Field::one());
  return m.dim() - m.rank();
}

std::string derived_note(PermGroup const &sub, SearchOptions const &opts)
{
  PermGroup D = derived_subgroup(sub);
  return "derived " + D.order().str() + (is_simple(D, opts) ? " simple" : " not simple");
}

} // namespace

Integer levi_order_in_group(GroupSpec const &spec, LeviEntry const &levi)
{
  Integer q = spec.q;
  switch (spec.family) {
  case Family::SL:
    return levi.order / (q - 1);
  case Family::SU:
    return levi.order / (q + 1);
  case Family::GL:
  case Family::GU:
  case Family::Sp:
  case Family::SOodd:
    return levi.order;
  case Family::SOevenPlus:
  case Family::SOevenMinus:
    // the GL and GU blocks lie in SO; the GO factor meets it with index 2
    return levi.shape.s > 0 ? levi.order / 2 : levi.order;
  default:
    throw UnsupportedError(std::string("no Levi shapes for ") + family_name(spec.family));
  }
}

unsigned shape_fixed_dimension(GroupSpec const &spec, LeviShape const &shape)
{
  switch (spec.family) {
  case Family::SL:
  case Family::SU:
  case Family::GL:
  case Family::GU:
    return shape.s;
  case Family::SOodd:
    return 2 * shape.s + 1;
  default:
    return 2 * shape.s;
  }
}

Integer exceptional_label_order(GroupSpec const &spec, unsigned d, std::string const &label)
{
  if (label == "torus") {
    Integer t = 1;
    for (unsigned i = 0, m = order_polynomial(spec).multiplicity(d); i < m; ++i)
      t *= cyclotomic_value(d, spec.q);
    return t;
  }
  return structure_order(label, spec.q, d);
}

bool is_simple(PermGroup const &G, SearchOptions const &opts)
{
  if (G.is_trivial())
    return false;
  // a nontrivial normal subgroup contains a whole class of elements of
  // prime order, and each such class meets every Sylow subgroup
  for (unsigned p : prime_divisors(G.order())) {
    PermGroup P = sylow(G, p, opts);
    std::unordered_set<Perm, PermHash> done;
    bool simple = true;
    P.for_each_element([&](Perm const &z) {
      if (z.is_identity() || z.order() != p || done.count(z))
        return true;
      if (normal_closure(G, {z}).order() != G.order()) {
        simple = false;
        return false;
      }
      std::vector<Perm> stack{z};
      done.insert(z);
      while (!stack.empty()) {
        Perm w = stack.back();
        stack.pop_back();
        for (auto const &g : P.generators()) {
          Perm v = conj(w, g);
          if (done.insert(v).second)
            stack.push_back(v);
        }
      }
      return true;
    });
    if (!simple)
      return false;
  }
  return true;
}

std::vector<ReportRow> run_instance(InstanceConfig const &inst, SuiteConfig const &cfg)
{
  SearchOptions search;
  search.node_budget = cfg.node_budget;
  search.seed = cfg.seed;

  ReportRow head;
  head.group = inst.group;
  head.ell = inst.ell;

  GroupSpec spec;
  PermGroup G;
  // matrix data for classical groups, to read off fixed spaces
  std::optional<MatrixGroup> mg;
  std::optional<PermAction> action;
  try {
    spec = GroupSpec::parse(inst.group);
    bool matrix_built = false;
    if (!inst.perms && spec.is_classical()) {
      try {
        mg = matrix_generators(spec);
        matrix_built = true;
      } catch (UnsupportedError const &) {
      }
    }
    if (matrix_built) {
      action = perm_action(mg->gens, ActionKind::reduced_scalars, faithful_scalar_quotient(spec));
      G = PermGroup(action->degree, action->gens);
    } else if (inst.perms) {
      PermFile pf = named_generators(*inst.perms);
      G = PermGroup(pf.degree, pf.gens);
      if (spec.family != Family::Sporadic && G.order() != order_value(spec))
        throw Error(*inst.perms + " has order " + G.order().str() + ", not |" + spec.str() + "|");
    } else {
      G = build_group(spec);
    }
  } catch (std::exception const &e) {
    head.reason = skip_reason(e);
    return {head};
  }
  head.group_order = G.order();

  std::vector<Perm> reps;
  try {
    if (!is_prime(inst.ell) || inst.ell == 2)
      throw RefusalError("ell must be an odd prime");
    if (G.order() % inst.ell != 0)
      throw RefusalError(std::to_string(inst.ell) + " does not divide |G|");
    if (!sylow(G, inst.ell, search).is_abelian())
      throw RefusalError("Sylow " + std::to_string(inst.ell) + "-subgroups are non-abelian");
    reps = p_class_representatives(G, inst.ell, search);
  } catch (std::exception const &e) {
    head.reason = skip_reason(e);
    return {head};
  }

  bool symmetric = spec.family == Family::Sym || spec.family == Family::Alt;
  std::optional<PermGroup> sym_ambient;
  if (spec.family == Family::Alt)
    sym_ambient = PermGroup::symmetric(spec.n);

  std::vector<ReportRow> rows;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    Perm const &x = reps[i];
    ReportRow row = head;
    row.rep = static_cast<unsigned>(i + 1);
    row.rep_order = x.order();
    try {
      row.centraliser_order = centraliser(G, x, search).order();

      SubnormResult F = subnormaliser_formula(G, x, inst.ell, search);
      row.computed = F.subnormaliser.order();
      row.picky = F.picky;
      row.method = method_name(F.method);
      if (G.order() <= cfg.ceiling) {
        BruteForceOptions bo;
        bo.ceiling = cfg.ceiling;
        bo.exact_set = inst.exact_set;
        bo.threads = 1;
        bo.search = search;
        SubnormResult B = subnormaliser_bruteforce(G, x, bo);
        row.method = "bruteforce+formula";
        if (!B.subnormaliser.same_group(F.subnormaliser)) {
          row.verdict = Verdict::mismatch;
          row.reason = "bruteforce " + B.subnormaliser.order().str() + " differs from formula";
        }
        if (B.set_size)
          row.structure = "set " + B.set_size->str();
      } else {
        row.method += "(bruteforce over ceiling)";
      }

      std::vector<Prediction> preds;
      if (symmetric) {
        unsigned k = count_cycles(x, inst.ell);
        row.shape = "k=" + std::to_string(k);
        bool alt = spec.family == Family::Alt;
        preds.push_back(predict_symmetric(spec.n, inst.ell, k, alt));
        if (alt) {
          // Sub_{A_n}(x) = Sub_{S_n}(x) cap A_n
          SubnormResult S = subnormaliser_formula(*sym_ambient, x, inst.ell, search);
          bool odd = false;
          for (auto const &g : S.subnormaliser.generators())
            odd |= !g.is_even();
          Integer inter = odd ? S.subnormaliser.order() / 2 : S.subnormaliser.order();
          bool inside = S.subnormaliser.contains_all(F.subnormaliser.generators());
          if (inter != row.computed || !inside) {
            row.verdict = Verdict::mismatch;
            row.reason = "Sub in S_n cap A_n has order " + inter.str();
          }
          Prediction full = predict_symmetric(spec.n, inst.ell, k, false);
          if (full.order != S.subnormaliser.order()) {
            row.verdict = Verdict::mismatch;
            row.reason = "Sub in S_n has order " + S.subnormaliser.order().str();
          }
        }
      } else if (spec.family == Family::Sporadic) {
        row.shape = "-";
        preds.push_back(predict_sporadic(spec.name, inst.ell, row.centraliser_order));
      } else if (spec.is_exceptional()) {
        unsigned d = e_ell(inst.ell, spec.q);
        std::string label;
        for (auto const &l : exceptional_centralisers(spec, d))
          if (exceptional_label_order(spec, d, l) == row.centraliser_order)
            label = l;
        row.shape = label.empty() ? "other" : label;
        preds = predict_exceptional(spec, inst.ell, label);
        row.structure = derived_note(F.subnormaliser, search);
      } else {
        unsigned d = e_ell(inst.ell, spec.q);
        std::string why;
        std::optional<unsigned> fixed;
        if (mg) {
          auto m = lift_to_matrix(*action, *mg, x);
          if (!m)
            throw Error("no matrix lift for class representative");
          fixed = fixed_dimension(*m);
        }
        auto shape = match_shape(spec, d, row.centraliser_order, fixed, why);
        if (!shape) {
          row.shape = "?";
          if (why.rfind("ambiguous", 0) == 0) {
            row.verdict = Verdict::skipped;
            row.reason = why;
          } else {
            row.verdict = Verdict::mismatch;
            row.reason = why;
          }
          rows.push_back(row);
          continue;
        }
        row.shape = shape->str();
        preds.push_back(predict_subnormaliser(spec, inst.ell, *shape));
      }

      if (row.verdict == Verdict::mismatch && !row.reason.empty()) {
        apply(row, preds, G.order());
        row.verdict = Verdict::mismatch;
      } else {
        apply(row, preds, G.order());
      }
    } catch (std::exception const &e) {
      row.verdict = Verdict::skipped;
      row.reason = skip_reason(e);
    }
    if (inst.shape && row.shape != *inst.shape)
      continue;
    rows.push_back(row);
  }
  return rows;
}

Report run_suite(SuiteConfig const &cfg)
{
  std::vector<std::vector<ReportRow>> parts(cfg.instances.size());
  unsigned width = std::max(1u, cfg.threads);
  std::size_t next = 0;
  std::mutex m;
  auto worker = [&] {
    for (;;) {
      std::size_t i;
      {
        std::lock_guard<std::mutex> lock(m);
        if (next == cfg.instances.size())
          return;
        i = next++;
      }
      parts[i] = run_instance(cfg.instances[i], cfg);
    }
  };
  if (width == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < width; ++w)
      pool.emplace_back(worker);
    for (auto &t : pool)
      t.join();
  }
  Report r;
  r.suite = cfg.name;
  for (auto &p : parts)
    r.rows.insert(r.rows.end(), p.begin(), p.end());
  return r;
}

} // namespace subn

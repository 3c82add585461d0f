#include "dimjump/task.hpp"

#include <set>
#include <sstream>

#include "dimjump/errors.hpp"
#include "dimjump/parse.hpp"

namespace dimjump {

namespace {

constexpr std::size_t kMaxRows = 16;
constexpr std::size_t kMaxCols = 32;
constexpr std::size_t kMaxModules = 64;
constexpr std::size_t kMaxProbes = 32;
constexpr std::size_t kMaxChecks = 64;

struct Cell {
  Polynomial poly;
  Token at;
};

class TaskParser {
 public:
  TaskParser(std::string_view text, const TaskOverrides& ov) : ts_(tokenize(text)), ov_(ov) {}

  TaskFile run() {
    if (ts_.at_end()) ts_.fail("'ring'");
    ring_statement();
    while (!ts_.at_end()) {
      const Token& t = ts_.peek();
      if (ts_.accept_word("order")) {
        order_statement(t);
      } else if (ts_.accept_word("window")) {
        window_statement();
      } else if (ts_.accept_word("qmax")) {
        const Token& v = ts_.peek();
        long long q = ts_.expect_int();
        if (q > kMaxQ) ts_.fail_at(v, "qmax must be at most " + std::to_string(kMaxQ));
        task_.qmax = int(q);
      } else if (ts_.accept_word("module")) {
        module_statement();
      } else if (ts_.accept_word("probe")) {
        probe_statement(t);
      } else if (ts_.accept_word("check")) {
        check_statement(t);
      } else {
        ts_.fail("statement keyword");
      }
      ts_.accept_punct(';');
    }
    return std::move(task_);
  }

 private:
  void ring_statement() {
    ts_.expect_word("ring");
    const Token& ft = ts_.peek();
    Field field = Field::rationals();
    if (ts_.accept_word("QQ")) {
    } else if (ts_.accept_word("GF")) {
      ts_.expect_punct('(');
      const Token& pt = ts_.peek();
      long long p = ts_.expect_int();
      try {
        field = Field::prime(std::uint64_t(p));
      } catch (const AlgebraError& e) {
        ts_.fail_at(pt, e.what());
      }
      ts_.expect_punct(')');
    } else {
      ts_.fail_at(ft, "expected field QQ or GF(p)");
    }
    if (ov_.field) field = *ov_.field;
    ts_.expect_punct('[');
    std::vector<Variable> vars;
    std::set<std::string> names;
    if (!ts_.is_punct(']')) {
      do {
        const Token& vt = ts_.peek();
        std::string name = ts_.expect_ident();
        if (!names.insert(name).second) ts_.fail_at(vt, "duplicate variable '" + name + "'");
        int w = 1;
        if (ts_.accept_punct(':')) {
          const Token& wt = ts_.peek();
          long long v = ts_.expect_int();
          if (v < 1 || v > 16) ts_.fail_at(wt, "weights must lie in 1..16");
          w = int(v);
        }
        vars.push_back({name, w});
        if (vars.size() > std::size_t(kMaxTaskVars))
          ts_.fail_at(vt, "at most " + std::to_string(kMaxTaskVars) + " variables");
      } while (ts_.accept_punct(','));
    }
    ts_.expect_punct(']');
    order_ = ov_.order.value_or(OrderKind::grevlex);
    task_.ring = make_ring(field, std::move(vars), order_);
    task_.rees = dimjump::rees_ring(task_.ring);
  }

  void order_statement(const Token& at) {
    if (!task_.modules.empty() || !task_.probes.empty()) ts_.fail_at(at, "order must precede modules and probes");
    const Token& t = ts_.peek();
    OrderKind k;
    if (ts_.accept_word("lex"))
      k = OrderKind::lex;
    else if (ts_.accept_word("grevlex"))
      k = OrderKind::grevlex;
    else
      ts_.fail_at(t, "expected grevlex or lex");
    if (ov_.order) return;
    task_.ring = with_order(task_.ring, k);
    task_.rees = dimjump::rees_ring(task_.ring);
  }

  void window_statement() {
    const Token& t = ts_.peek();
    long long lo = ts_.expect_int(true);
    ts_.expect_punct(':');
    long long hi = ts_.expect_int(true);
    if (lo > hi) ts_.fail_at(t, "window bounds reversed");
    if (std::abs(lo) > kMaxWindow || std::abs(hi) > kMaxWindow)
      ts_.fail_at(t, "window bounds must lie within +-" + std::to_string(kMaxWindow));
    task_.window = Window{int(lo), int(hi)};
  }

  std::vector<int> int_list(std::size_t max_len) {
    std::vector<int> out;
    ts_.expect_punct('[');
    if (!ts_.is_punct(']')) {
      do {
        const Token& t = ts_.peek();
        long long v = ts_.expect_int(true);
        if (std::abs(v) > kMaxTwist) ts_.fail_at(t, "twist out of range");
        out.push_back(int(v));
        if (out.size() > max_len) ts_.fail_at(t, "list too long");
      } while (ts_.accept_punct(','));
    }
    ts_.expect_punct(']');
    return out;
  }

  Polynomial poly(const RingPtr& ring) {
    const Token& t = ts_.peek();
    try {
      return parse_polynomial(ring, ts_);
    } catch (const AlgebraError& e) {
      ts_.fail_at(t, e.what());
    }
  }

  std::vector<std::vector<Cell>> matrix(const RingPtr& ring) {
    std::vector<std::vector<Cell>> rows;
    ts_.expect_punct('[');
    if (!ts_.is_punct(']')) {
      do {
        const Token& rt = ts_.peek();
        std::vector<Cell> row;
        ts_.expect_punct('[');
        if (!ts_.is_punct(']')) {
          do {
            Token at = ts_.peek();
            row.push_back(Cell{poly(ring), at});
            if (row.size() > kMaxCols) ts_.fail_at(at, "too many columns");
          } while (ts_.accept_punct(','));
        }
        ts_.expect_punct(']');
        if (!rows.empty() && rows.front().size() != row.size()) ts_.fail_at(rt, "rows have different lengths");
        rows.push_back(std::move(row));
        if (rows.size() > kMaxRows) ts_.fail_at(rt, "too many rows");
      } while (ts_.accept_punct(','));
    }
    ts_.expect_punct(']');
    return rows;
  }

  FPModule coker(const RingPtr& ring, const Token& at) {
    auto rows = matrix(ring);
    std::optional<std::vector<int>> row_tw, col_tw;
    Token rows_at = ts_.peek(), cols_at = ts_.peek();
    if (ts_.is_word("rows")) {
      rows_at = ts_.next();
      row_tw = int_list(kMaxRows);
    }
    if (ts_.is_word("cols")) {
      cols_at = ts_.next();
      col_tw = int_list(kMaxCols);
    }
    Grading mode = ts_.accept_word("ungraded") ? Grading::ungraded : Grading::graded;
    std::size_t m = rows.size();
    std::size_t k = rows.empty() ? 0 : rows.front().size();
    if (!row_tw) row_tw = std::vector<int>(m, 0);
    if (rows.empty()) m = row_tw->size();
    if (row_tw->size() != m) ts_.fail_at(rows_at, "expected " + std::to_string(m) + " row twists");
    if (!col_tw) {
      col_tw = std::vector<int>(k, 0);
      if (mode == Grading::graded)
        for (std::size_t j = 0; j < k; ++j)
          for (std::size_t i = 0; i < m; ++i) {
            const Cell& c = rows[i][j];
            if (c.poly.is_zero()) continue;
            Homogeneity h = is_homogeneous(c.poly);
            if (!h.homogeneous)
              ts_.fail_at(c.at, "entry (" + std::to_string(i) + ", " + std::to_string(j) + ") is not homogeneous");
            (*col_tw)[j] = *h.degree + (*row_tw)[i];
            if (std::abs((*col_tw)[j]) > kMaxTwist) ts_.fail_at(c.at, "twist out of range");
            break;
          }
    }
    if (col_tw->size() != k) ts_.fail_at(cols_at, "expected " + std::to_string(k) + " column twists");
    std::vector<std::vector<Polynomial>> polys;
    for (const auto& r : rows) {
      std::vector<Polynomial> pr;
      for (const auto& c : r) pr.push_back(c.poly);
      polys.push_back(std::move(pr));
    }
    if (rows.empty()) polys.assign(m, {});
    GradedMatrix P = GradedMatrix::from_rows(FreeModule{ring, *col_tw}, FreeModule{ring, *row_tw}, polys);
    if (mode == Grading::graded) {
      if (auto v = validate_graded_matrix(P)) {
        const Token& cell = rows[v->row][v->col].at;
        ts_.fail_at(cell, "degree error: " + v->message());
      }
    }
    (void)at;
    return FPModule::coker(std::move(P), mode);
  }

  FPModule free_module(const RingPtr& ring) {
    std::vector<int> tw = int_list(kMaxRows);
    Grading mode = ts_.accept_word("ungraded") ? Grading::ungraded : Grading::graded;
    return FPModule::free(FreeModule{ring, tw}, mode);
  }

  void module_statement() {
    ModuleDef def;
    const Token& nt = ts_.peek();
    def.line = nt.line;
    def.name = ts_.expect_ident();
    if (task_.find(def.name)) ts_.fail_at(nt, "module '" + def.name + "' already defined");
    if (task_.modules.size() >= kMaxModules) ts_.fail_at(nt, "too many modules");
    ts_.expect_punct('=');
    const Token& kt = ts_.peek();
    if (ts_.accept_word("over")) {
      ts_.expect_word("rees");
      def.over_rees = true;
    }
    const RingPtr& ring = def.over_rees ? task_.rees->total : task_.ring;
    if (ts_.accept_word("coker")) {
      def.kind = ModuleDef::Kind::coker;
      def.module = coker(ring, kt);
    } else if (ts_.accept_word("free")) {
      def.kind = ModuleDef::Kind::free;
      def.module = free_module(ring);
    } else if (!def.over_rees && ts_.accept_word("rees")) {
      def.kind = ModuleDef::Kind::rees;
      def.over_rees = true;
      const Token& st = ts_.peek();
      def.source = ts_.expect_ident();
      const ModuleDef* src = task_.find(def.source);
      if (!src) ts_.fail_at(st, "unknown module '" + def.source + "'");
      if (src->over_rees || !src->module) ts_.fail_at(st, "'" + def.source + "' is not a module over the base ring");
      if (ts_.is_word("filtration")) {
        const Token& ftok = ts_.next();
        def.filtration = Filtration{int_list(kMaxRows)};
        if (def.filtration->generator_degrees.size() != src->module->num_generators())
          ts_.fail_at(ftok, "filtration needs " + std::to_string(src->module->num_generators()) + " levels");
      } else if (!src->module->graded()) {
        ts_.fail_at(st, "ungraded module '" + def.source + "' needs filtration levels");
      }
      def.module = def.filtration ? rees_module(*task_.rees, *src->module, *def.filtration).tilde
                                  : rees_module(*task_.rees, *src->module).tilde;
    } else if (!def.over_rees && ts_.accept_word("model")) {
      def.kind = ModuleDef::Kind::model;
      const Token& mt = ts_.peek();
      if (ts_.accept_word("J"))
        def.model = InjectiveModel::J;
      else if (ts_.accept_word("I0"))
        def.model = InjectiveModel::TorsionAtZero;
      else
        ts_.fail_at(mt, "expected model J or I0");
      if (task_.ring->num_vars() != 1 || task_.ring->weight(0) != 1)
        ts_.fail_at(mt, "models live over a ring in one variable of weight 1");
    } else {
      ts_.fail("module constructor");
    }
    task_.modules.push_back(std::move(def));
  }

  void probe_statement(const Token& at) {
    if (task_.probes.size() >= kMaxProbes) ts_.fail_at(at, "too many probes");
    ProbeDef p;
    ts_.expect_punct('(');
    do {
      p.generators.push_back(poly(task_.ring));
      if (p.generators.size() > kMaxCols) ts_.fail_at(at, "too many probe generators");
    } while (ts_.accept_punct(','));
    ts_.expect_punct(')');
    for (const auto& g : p.generators) {
      Homogeneity h = is_homogeneous(g);
      if (!h.homogeneous || !h.degree) p.graded = false;
    }
    task_.probes.push_back(std::move(p));
  }

  const ModuleDef& module_arg(CheckDef& c) {
    const Token& t = ts_.peek();
    std::string name = ts_.expect_ident();
    const ModuleDef* d = task_.find(name);
    if (!d) ts_.fail_at(t, "unknown module '" + name + "'");
    c.args.push_back(name);
    arg_tokens_.push_back(t);
    return *d;
  }

  void check_statement(const Token& at) {
    if (task_.checks.size() >= kMaxChecks) ts_.fail_at(at, "too many checks");
    CheckDef c;
    c.line = at.line;
    arg_tokens_.clear();
    const Token& kt = ts_.peek();
    c.kind = ts_.expect_ident();
    auto need = [&](bool ok, std::size_t arg, const std::string& what) {
      if (!ok) ts_.fail_at(arg_tokens_[arg], "'" + c.args[arg] + "' must be " + what);
    };
    if (c.kind == "lemma1") {
      const ModuleDef& a = module_arg(c);
      const ModuleDef& b = module_arg(c);
      need(a.over_rees, 0, "a module over the Rees ring");
      need(!b.over_rees && b.module && b.module->graded(), 1, "a graded module over the base ring");
    } else if (c.kind == "lemma2") {
      const ModuleDef& a = module_arg(c);
      const ModuleDef& b = module_arg(c);
      need(a.over_rees, 0, "a module over the Rees ring");
      need(b.over_rees, 1, "a module over the Rees ring");
    } else if (c.kind == "lemma3") {
      need(module_arg(c).over_rees, 0, "a module over the Rees ring");
    } else if (c.kind == "jump") {
      const ModuleDef& n = module_arg(c);
      need(!n.over_rees && (!n.module || n.module->graded()), 0, "a graded module over the base ring or a model");
    } else if (c.kind == "example15") {
      if (ts_.accept_word("control")) c.args.push_back("control");
    } else {
      ts_.fail_at(kt, "unknown check '" + c.kind + "'");
    }
    task_.checks.push_back(std::move(c));
  }

  TokenStream ts_;
  TaskOverrides ov_;
  OrderKind order_ = OrderKind::grevlex;
  TaskFile task_;
  std::vector<Token> arg_tokens_;
};

std::string join_ints(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

std::string format_module(const FPModule& M) {
  const GradedMatrix& P = M.presentation();
  std::string s = "coker [";
  for (std::size_t i = 0; i < P.rows(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < P.cols(); ++j) s += (j ? ", " : "") + P.entry(i, j).to_string();
    s += "]";
  }
  s += "] rows " + join_ints(P.target().twists) + " cols " + join_ints(P.source().twists);
  if (!M.graded()) s += " ungraded";
  return s;
}

}  // namespace

const ModuleDef* TaskFile::find(const std::string& name) const {
  for (const auto& m : modules)
    if (m.name == name) return &m;
  return nullptr;
}

std::string ProbeDef::name() const {
  std::string s = "(";
  for (std::size_t i = 0; i < generators.size(); ++i) s += (i ? ", " : "") + generators[i].to_string();
  return s + ")";
}

FPModule ProbeDef::module() const {
  const RingPtr& ring = generators.front().ring();
  std::vector<int> tw;
  for (const auto& g : generators) tw.push_back(graded ? *g.weighted_degree() : 0);
  if (!graded) tw.assign(generators.size(), 0);
  std::vector<std::vector<Polynomial>> rows{generators};
  GradedMatrix P = GradedMatrix::from_rows(FreeModule{ring, tw}, FreeModule{ring, {0}}, rows);
  return FPModule::coker(std::move(P), graded ? Grading::graded : Grading::ungraded);
}

TaskFile parse_task(std::string_view text, const TaskOverrides& overrides) {
  return TaskParser(text, overrides).run();
}

std::string format_task(const TaskFile& t) {
  std::ostringstream os;
  const Ring& R = *t.ring;
  os << "ring " << (R.field().is_rationals() ? "QQ" : "GF(" + std::to_string(R.field().characteristic()) + ")") << "[";
  for (std::size_t i = 0; i < R.num_vars(); ++i)
    os << (i ? ", " : "") << R.variables()[i].name << ":" << R.variables()[i].weight;
  os << "]\n";
  if (R.order() == OrderKind::lex) os << "order lex\n";
  if (t.window) os << "window " << t.window->lo << ":" << t.window->hi << "\n";
  if (t.qmax) os << "qmax " << *t.qmax << "\n";
  for (const auto& m : t.modules) {
    os << "module " << m.name << " = ";
    switch (m.kind) {
      case ModuleDef::Kind::coker:
        os << (m.over_rees ? "over rees " : "") << format_module(*m.module);
        break;
      case ModuleDef::Kind::free:
        os << (m.over_rees ? "over rees " : "") << "free " << join_ints(m.module->generators().twists)
           << (m.module->graded() ? "" : " ungraded");
        break;
      case ModuleDef::Kind::rees:
        os << "rees " << m.source;
        if (m.filtration) os << " filtration " << join_ints(m.filtration->generator_degrees);
        break;
      case ModuleDef::Kind::model:
        os << "model " << model_name(m.model);
        break;
    }
    os << "\n";
  }
  for (const auto& p : t.probes) os << "probe " << p.name() << "\n";
  for (const auto& c : t.checks) {
    os << "check " << c.kind;
    for (const auto& a : c.args) os << " " << a;
    os << "\n";
  }
  return os.str();
}

}  // namespace dimjump

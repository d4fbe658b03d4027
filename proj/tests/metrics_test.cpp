#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <sstream>

#include "smellscope/common/error.hpp"
#include "smellscope/metrics/extractor.hpp"
#include "smellscope/metrics/java_syntax.hpp"
#include "smellscope/metrics/metrics.hpp"
#include "smellscope/metrics/metrics_table.hpp"
#include "test_support.hpp"

using namespace smellscope;
using smellscope::test::TempDir;

namespace {

CodeModel model_of(const std::string& path, const std::string& source) {
  TempDir dir("metrics");
  dir.write(path, source);
  return parse_release(dir.path(), "r1");
}

const ClassEntity& class_named(const CodeModel& m, const std::string& name) {
  const auto* c = m.find_class(name);
  if (c == nullptr) throw std::runtime_error("no class " + name);
  return *c;
}

const MethodEntity& method_named(const ClassEntity& c, const std::string& name) {
  for (const auto& m : c.methods)
    if (m.name == name) return m;
  throw std::runtime_error("no method " + name);
}

double metric(const EntityMetricVector& v, Metric m) {
  const auto value = v.get(m);
  if (!value) throw std::runtime_error("metric unset: " + std::string(metric_name(m)));
  return *value;
}

}  // namespace

TEST(ParseRelease, OneClassTwoMethods) {
  const auto model = model_of("p/A.java", R"(package p;
public class A {
  void f() { }
  int g(int x) { return x + 1; }
}
)");
  ASSERT_EQ(model.classes().size(), 1u);
  EXPECT_EQ(model.classes()[0].qualified_name, "p.A");
  EXPECT_EQ(model.method_count(), 2u);
  EXPECT_EQ(model.release_id(), "r1");
}

TEST(ParseRelease, EmptyDirectoryIsEmptyModel) {
  TempDir dir("empty");
  EXPECT_THROW(parse_release(dir.path(), "r1"), EmptyModelError);
}

TEST(ParseRelease, MissingDirectoryIsInputError) {
  EXPECT_THROW(parse_release("/nonexistent/smellscope/src", "r1"), InputError);
}

TEST(ParseRelease, BrokenFileBecomesDiagnostic) {
  TempDir dir("broken");
  dir.write("a/Good.java", "package a;\nclass Good { void f() {} }\nclass Other { }\n");
  dir.write("a/Bad.java", "package a;\nclass Bad { void f( { }\n");
  const auto model = parse_release(dir.path(), "r1");
  EXPECT_EQ(model.classes().size(), 2u);
  ASSERT_EQ(model.diagnostics().size(), 1u);
  EXPECT_NE(model.diagnostics()[0].file.find("Bad.java"), std::string::npos);
}

TEST(ParseRelease, OnlyBrokenFilesIsEmptyModel) {
  TempDir dir("allbad");
  dir.write("Bad.java", "class Bad { void f( { }\n");
  EXPECT_THROW(parse_release(dir.path(), "r1"), EmptyModelError);
}

TEST(ParseRelease, ThreadCountDoesNotChangeModel) {
  const auto root = test::fixture_dir() / "project" / "releases" / "r2";
  const auto a = compute_release_metrics(parse_release(root, "r2", {1}));
  const auto b = compute_release_metrics(parse_release(root, "r2", {4}));
  EXPECT_EQ(a, b);
}

TEST(JavaParser, RejectsUnbalancedBraces) {
  EXPECT_THROW(java::parse_file("class A { void f() { }", "A.java"), ParseError);
}

TEST(JavaParser, HandlesNestedAndGenericTypes) {
  const auto f = java::parse_file(R"(package q;
import java.util.*;
public class Outer<T extends Comparable<T>> {
  private Map<String, List<T>> index = new HashMap<>();
  static class Inner { int x; }
  @Override public String toString() { return "a{b}c"; }
}
)", "q/Outer.java");
  EXPECT_EQ(f.package_name, "q");
  ASSERT_EQ(f.classes.size(), 2u);
  EXPECT_EQ(f.classes[0].qualified_name, "q.Outer");
  EXPECT_EQ(f.classes[1].qualified_name, "q.Outer.Inner");
}

TEST(Metrics, StraightLineMethodHasCycloOne) {
  const auto model = model_of("A.java", "class A { int f(int a) { int b = a * 2; return b; } }\n");
  const auto& a = class_named(model, "A");
  const auto v = compute_entity_metrics(model, method_named(a, "f"));
  EXPECT_EQ(metric(v, Metric::CYCLO), 1);
  EXPECT_EQ(metric(v, Metric::MAXNESTING), 0);
  EXPECT_EQ(metric(v, Metric::NOLV), 2);  // parameter a plus local b
}

TEST(Metrics, BranchesAndNestingCounted) {
  const auto model = model_of("A.java", R"(class A {
  int f(int a) {
    if (a > 0 && a < 10) {
      for (int i = 0; i < a; i++) {
        while (a > 1) { a--; }
      }
    } else if (a == 0) {
      return 0;
    }
    return a > 5 ? 1 : 2;
  }
}
)");
  const auto v = compute_entity_metrics(model, method_named(class_named(model, "A"), "f"));
  // if, &&, for, while, else-if, ternary
  EXPECT_EQ(metric(v, Metric::CYCLO), 7);
  EXPECT_EQ(metric(v, Metric::MAXNESTING), 3);
}

TEST(Metrics, AccessorOnlyClassHasNoFunctionalMethods) {
  const auto model = model_of("p/Bean.java", R"(package p;
public class Bean {
  private int size;
  private String name;
  public int getSize() { return size; }
  public void setSize(int size) { this.size = size; }
  public String getName() { return name; }
  public void setName(String n) { name = n; }
}
)");
  const auto& bean = class_named(model, "p.Bean");
  for (const auto& m : bean.methods) EXPECT_TRUE(m.is_accessor) << m.name;
  const auto v = compute_entity_metrics(model, bean);
  EXPECT_EQ(metric(v, Metric::NOMNAMM), 0);
  EXPECT_EQ(metric(v, Metric::WOC), 0);
  EXPECT_EQ(metric(v, Metric::NOAM), 4);
  EXPECT_EQ(metric(v, Metric::WMCNAMM), 0);
}

TEST(Metrics, AccessorPatternRequiresName) {
  const auto model = model_of("A.java", R"(class A {
  private int x;
  public int value() { return x; }
  public int getDouble() { return x * 2; }
  public int getX() { return x; }
}
)");
  const auto& a = class_named(model, "A");
  EXPECT_FALSE(method_named(a, "value").is_accessor);
  EXPECT_FALSE(method_named(a, "getDouble").is_accessor);
  EXPECT_TRUE(method_named(a, "getX").is_accessor);
}

TEST(Metrics, FullySharedMethodsGiveTccOne) {
  const auto model = model_of("A.java", R"(class A {
  private int shared;
  public int a() { return shared + 1; }
  public int b() { return shared * 2; }
  public void c(int v) { shared += v; }
}
)");
  const auto v = compute_entity_metrics(model, class_named(model, "A"));
  EXPECT_DOUBLE_EQ(metric(v, Metric::TCC), 1.0);
}

TEST(Metrics, DisjointMethodsGiveTccZero) {
  const auto model = model_of("A.java", R"(class A {
  private int x;
  private int y;
  public int a() { return x + 1; }
  public int b() { return y * 2; }
}
)");
  const auto v = compute_entity_metrics(model, class_named(model, "A"));
  EXPECT_DOUBLE_EQ(metric(v, Metric::TCC), 0.0);
}

TEST(SmFeatures, NoSuperclassMeansDitZero) {
  const auto model = model_of("A.java", "class A { void f() {} }\n");
  EXPECT_EQ(compute_sm_features(model, class_named(model, "A")).dit, 0);
}

TEST(SmFeatures, DitFollowsModelHierarchy) {
  TempDir dir("dit");
  dir.write("A.java", "class A { }\n");
  dir.write("B.java", "class B extends A { }\n");
  dir.write("C.java", "class C extends B { }\n");
  dir.write("D.java", "class D extends java.util.ArrayList { }\n");
  const auto model = parse_release(dir.path(), "r1");
  EXPECT_EQ(compute_sm_features(model, class_named(model, "B")).dit, 1);
  EXPECT_EQ(compute_sm_features(model, class_named(model, "C")).dit, 2);
  EXPECT_EQ(compute_sm_features(model, class_named(model, "D")).dit, 1);
}

TEST(SmFeatures, CboCountsDistinctReferencedClasses) {
  TempDir dir("cbo");
  dir.write("p/X.java", "package p;\npublic class X { public int v() { return 1; } }\n");
  dir.write("p/Y.java", "package p;\npublic class Y { }\n");
  dir.write("p/Z.java", "package p;\npublic class Z { public static int k() { return 2; } }\n");
  dir.write("p/A.java", R"(package p;
public class A {
  private X x;
  private X again;
  public int f(Y y) { return x.v() + Z.k(); }
}
)");
  const auto model = parse_release(dir.path(), "r1");
  const auto sm = compute_sm_features(model, class_named(model, "p.A"));
  EXPECT_EQ(sm.cbo, 3);
  // f plus the distinct methods it calls: X.v and Z.k
  EXPECT_EQ(sm.rfc, 3);
}

TEST(SmFeatures, DisjointPairGivesLcomOne) {
  const auto model = model_of("A.java", R"(class A {
  private int x;
  private int y;
  void a() { x = 1; }
  void b() { y = 2; }
}
)");
  EXPECT_EQ(compute_sm_features(model, class_named(model, "A")).lcom, 1);
}

TEST(SmFeatures, LcomFloorsAtZero) {
  const auto model = model_of("A.java", R"(class A {
  private int x;
  void a() { x = 1; }
  void b() { x = 2; }
  void c() { x = 3; }
}
)");
  EXPECT_EQ(compute_sm_features(model, class_named(model, "A")).lcom, 0);
}

TEST(Metrics, MessageChainLengthCountsCalls) {
  TempDir dir("chain");
  dir.write("A.java", R"(class A {
  int f(B b) {
    int s = b.c().d().e();
    return s + b.c().d() + b.c();
  }
}
)");
  dir.write("B.java", "class B { B c() { return this; } B d() { return this; } int e() { return 1; } }\n");
  const auto model = parse_release(dir.path(), "r1");
  const auto v = compute_entity_metrics(model, method_named(class_named(model, "A"), "f"));
  EXPECT_EQ(metric(v, Metric::MaMCL), 3);
  EXPECT_EQ(metric(v, Metric::NMCS), 2);
  EXPECT_DOUBLE_EQ(metric(v, Metric::MeMCL), 2.5);
}

TEST(Metrics, ForeignAndLocalAttributeAccessAreDistinctCounts) {
  TempDir dir("atfd");
  dir.write("p/D.java", R"(package p;
public class D {
  public int a;
  public int b;
  private int c;
  public int getC() { return c; }
}
)");
  dir.write("p/U.java", R"(package p;
public class U {
  private int own1;
  private int own2;
  public int use(D d) {
    return d.a + d.a + d.b + d.getC() + own1 + own1 + own2;
  }
}
)");
  const auto model = parse_release(dir.path(), "r1");
  const auto& u = class_named(model, "p.U");
  const auto mv = compute_entity_metrics(model, method_named(u, "use"));
  EXPECT_EQ(metric(mv, Metric::ATFD), 3);
  EXPECT_EQ(metric(mv, Metric::ATLD), 2);
  EXPECT_EQ(metric(compute_entity_metrics(model, u), Metric::ATFD), 3);
  const auto dv = compute_entity_metrics(model, class_named(model, "p.D"));
  EXPECT_EQ(metric(dv, Metric::NOPA), 2);
  EXPECT_EQ(metric(dv, Metric::NOAM), 1);
}

TEST(Metrics, CallersFeedShotgunSurgeryMetrics) {
  TempDir dir("cm");
  dir.write("T.java", "class T { int target() { return 1; } }\n");
  dir.write("A.java", "class A { int f(T t) { return t.target(); } int g(T t) { return t.target(); } }\n");
  dir.write("B.java", "class B { int h(T t) { return t.target() + t.target(); } }\n");
  const auto model = parse_release(dir.path(), "r1");
  const auto v = compute_entity_metrics(model, method_named(class_named(model, "T"), "target"));
  EXPECT_EQ(metric(v, Metric::CM), 3);
  EXPECT_EQ(metric(v, Metric::CC), 2);
}

TEST(Metrics, EntityOutsideModelIsConsistencyError) {
  const auto model = model_of("A.java", "class A { void f() {} }\n");
  ClassEntity stranger;
  stranger.qualified_name = "Nope";
  EXPECT_THROW(compute_entity_metrics(model, stranger), ConsistencyError);
  MethodEntity m;
  m.owner = "A";
  m.name = "ghost";
  EXPECT_THROW(compute_entity_metrics(model, m), ConsistencyError);
}

TEST(MetricsInvariants, HoldOnFixtureReleases) {
  for (const char* rel : {"r1", "r2", "r3"}) {
    const auto model = parse_release(test::fixture_dir() / "project" / "releases" / rel, rel);
    const auto vectors = compute_release_metrics(model);
    for (const auto& v : vectors) {
      for (Metric m : kAllMetrics) {
        const auto value = v.get(m);
        EXPECT_EQ(value.has_value(), is_applicable(v.kind, m)) << v.qualified_name << " " << metric_name(m);
        if (!value) continue;
        EXPECT_GE(*value, 0) << v.qualified_name << " " << metric_name(m);
        if (is_ratio_metric(m)) EXPECT_LE(*value, 1) << v.qualified_name << " " << metric_name(m);
      }
      if (v.kind == EntityKind::Method) {
        EXPECT_GE(metric(v, Metric::CYCLO), 1);
      } else {
        EXPECT_LE(metric(v, Metric::LOCNAMM), metric(v, Metric::LOC)) << v.qualified_name;
      }
    }
    for (const auto& c : model.classes()) {
      std::size_t accessors = 0;
      for (const auto& m : c.methods) accessors += m.is_accessor ? 1 : 0;
      const auto v = compute_entity_metrics(model, c);
      EXPECT_EQ(metric(v, Metric::NOMNAMM) + static_cast<double>(accessors), static_cast<double>(c.methods.size()))
          << c.qualified_name;
      EXPECT_LE(c.source_span.start_line, c.source_span.end_line);
    }
  }
}

TEST(MetricsTable, RoundTripReproducesVectors) {
  const auto model = parse_release(test::fixture_dir() / "project" / "releases" / "r1", "r1");
  const auto vectors = compute_release_metrics(model);
  TempDir dir("table");
  const auto path = dir.write("metrics.csv", metrics_table_string(vectors));
  const auto table = load_metrics_table(path.string());
  ASSERT_EQ(table.releases.size(), 1u);
  EXPECT_EQ(table.releases.at("r1"), vectors);
}

namespace {

std::string header_line() {
  std::string header;
  for (const auto& c : metrics_columns()) header += (header.empty() ? "" : ",") + c;
  return header;
}

std::string row_line(const std::map<std::string, std::string>& cells) {
  std::string line;
  bool first = true;
  for (const auto& c : metrics_columns()) {
    if (!first) line += ",";
    first = false;
    if (auto it = cells.find(c); it != cells.end()) line += it->second;
  }
  return line;
}

}  // namespace

TEST(MetricsTable, TwoRowsGiveTwoVectors) {
  const auto cls = row_line({{"release", "r1"}, {"entity_kind", "class"}, {"qualified_name", "p.A"},
                             {"package", "p"}, {"LOC", "10"}, {"TCC", "0.5"}, {"WOC", "0"}});
  const auto method = row_line({{"release", "r1"}, {"entity_kind", "method"}, {"qualified_name", "p.A#f()"},
                                {"package", "p"}, {"LOC", "5"}, {"CYCLO", "2"}});
  const auto t = parse_metrics_table({header_line(), cls, method});
  ASSERT_EQ(t.releases.at("r1").size(), 2u);
  EXPECT_EQ(t.releases.at("r1")[0].get(Metric::LOC), 10);
  EXPECT_EQ(t.releases.at("r1")[0].get(Metric::TCC), 0.5);
  EXPECT_EQ(t.releases.at("r1")[1].kind, EntityKind::Method);
  EXPECT_FALSE(t.releases.at("r1")[1].get(Metric::TCC).has_value());
}

TEST(MetricsTable, HeaderOnlyIsEmptyWithWarning) {
  const auto t = parse_metrics_table({header_line()});
  EXPECT_TRUE(t.releases.empty());
  EXPECT_FALSE(t.warnings.empty());
}

TEST(MetricsTable, NonNumericCellNamesRowAndColumn) {
  const auto row = row_line({{"release", "r1"}, {"entity_kind", "class"}, {"qualified_name", "p.A"}, {"LOC", "abc"}});
  try {
    parse_metrics_table({header_line(), row}, "m.csv");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.row(), 2u);
    EXPECT_EQ(e.column(), "LOC");
  }
}

TEST(MetricsTable, UnknownColumnIsSchemaError) {
  EXPECT_THROW(parse_metrics_table({header_line() + ",BOGUS"}), SchemaError);
}

TEST(SplitIdentifier, CamelAndSnakeCase) {
  EXPECT_EQ(split_identifier("parseHTTPRequest_body"),
            (std::vector<std::string>{"parse", "http", "request", "body"}));
}

#include "smellscope/metrics/metrics.hpp"

#include <algorithm>
#include <unordered_set>

#include "smellscope/common/error.hpp"

namespace smellscope {

MetricCalculator::MetricCalculator(const CodeModel& model) : model_(model) {
  for (const auto& c : model_.classes()) {
    for (const auto& m : c.methods) {
      if (m.is_accessor && m.accessed_attributes.size() == 1) {
        accessor_fields_.emplace(CallTarget{c.qualified_name, m.name}, *m.accessed_attributes.begin());
      }
      for (const auto& call : m.calls) {
        if (!call.target_class.empty()) callers_[call].insert(m.qualified_name());
      }
    }
  }
}

const ClassEntity& MetricCalculator::owned_class(const ClassEntity& cls) const {
  const ClassEntity* found = model_.find_class(cls.qualified_name);
  if (found == nullptr) throw ConsistencyError("class " + cls.qualified_name + " is not part of the model");
  return *found;
}

const MethodEntity& MetricCalculator::owned_method(const MethodEntity& method) const {
  const ClassEntity* owner = model_.find_class(method.owner);
  if (owner != nullptr) {
    for (const auto& m : owner->methods) {
      if (m.signature() == method.signature()) return m;
    }
  }
  throw ConsistencyError("method " + method.qualified_name() + " is not part of the model");
}

std::set<std::string> MetricCalculator::lineage(const std::string& cls) const {
  std::set<std::string> out;
  for (const ClassEntity* c = model_.find_class(cls); c != nullptr && out.insert(c->qualified_name).second;) {
    c = c->superclass ? model_.find_class(*c->superclass) : nullptr;
  }
  return out;
}

std::set<AttributeRef> MetricCalculator::touched_attributes(const MethodEntity& m) const {
  std::set<AttributeRef> attrs = m.accessed_attributes;
  for (const auto& call : m.calls) {
    if (auto it = accessor_fields_.find(call); it != accessor_fields_.end()) attrs.insert(it->second);
  }
  return attrs;
}

std::set<std::string> MetricCalculator::instance_attributes_closure(const ClassEntity& cls,
                                                                    const MethodEntity& m) const {
  std::unordered_set<std::string> instance;
  for (const auto& a : cls.attributes) {
    if (!a.is_static) instance.insert(a.name);
  }
  std::set<std::string> attrs;
  std::set<std::string> visited;
  std::vector<const MethodEntity*> work{&m};
  while (!work.empty()) {
    const MethodEntity* cur = work.back();
    work.pop_back();
    if (!visited.insert(cur->signature()).second) continue;
    for (const auto& a : cur->accessed_attributes) {
      if (a.owner == cls.qualified_name && instance.count(a.name)) attrs.insert(a.name);
    }
    for (const auto& call : cur->calls) {
      if (call.target_class != cls.qualified_name) continue;
      for (const auto& other : cls.methods) {
        if (other.name == call.target_method && !other.is_constructor) work.push_back(&other);
      }
    }
  }
  return attrs;
}

int MetricCalculator::depth_of_inheritance(const ClassEntity& cls) const {
  int depth = 0;
  std::unordered_set<std::string> seen{cls.qualified_name};
  for (const ClassEntity* c = &cls; c->superclass;) {
    ++depth;
    const ClassEntity* sup = model_.find_class(*c->superclass);
    if (sup == nullptr || !seen.insert(sup->qualified_name).second) break;
    c = sup;
  }
  return depth;
}

EntityMetricVector MetricCalculator::method_metrics(const MethodEntity& method) const {
  const MethodEntity& m = owned_method(method);
  const ClassEntity& cls = *model_.find_class(m.owner);
  const auto family = lineage(cls.qualified_name);

  EntityMetricVector v;
  v.release = model_.release_id();
  v.kind = EntityKind::Method;
  v.qualified_name = m.qualified_name();
  v.package = cls.package_name();

  v.set(Metric::LOC, m.end_line - m.start_line + 1);
  v.set(Metric::CYCLO, 1 + m.decision_points);
  v.set(Metric::MAXNESTING, m.max_nesting);
  v.set(Metric::NOLV, static_cast<double>(m.parameter_types.size()) + m.local_variable_count);

  std::size_t local = 0;
  std::size_t foreign = 0;
  for (const auto& a : touched_attributes(m)) {
    (family.count(a.owner) ? local : foreign) += 1;
  }
  v.set(Metric::ATLD, static_cast<double>(local));
  v.set(Metric::ATFD, static_cast<double>(foreign));

  std::set<CallTarget> outgoing;
  std::set<std::string> called_classes;
  for (const auto& call : m.calls) {
    if (call.target_class.empty() || family.count(call.target_class)) continue;
    outgoing.insert(call);
    called_classes.insert(call.target_class);
  }
  v.set(Metric::CINT, static_cast<double>(outgoing.size()));
  v.set(Metric::FANOUT, static_cast<double>(called_classes.size()));
  v.set(Metric::CDISP, outgoing.empty() ? 0.0
                                        : static_cast<double>(called_classes.size()) / static_cast<double>(outgoing.size()));

  std::set<std::string> caller_methods;
  std::set<std::string> caller_classes;
  if (auto it = callers_.find(CallTarget{cls.qualified_name, m.name}); it != callers_.end()) {
    for (const auto& caller : it->second) {
      if (caller == m.qualified_name()) continue;
      caller_methods.insert(caller);
      caller_classes.insert(caller.substr(0, caller.find('#')));
    }
  }
  v.set(Metric::CM, static_cast<double>(caller_methods.size()));
  v.set(Metric::CC, static_cast<double>(caller_classes.size()));

  double longest = 0;
  double total = 0;
  for (const auto& chain : m.message_chains) {
    longest = std::max(longest, static_cast<double>(chain.size()));
    total += static_cast<double>(chain.size());
  }
  v.set(Metric::NMCS, static_cast<double>(m.message_chains.size()));
  v.set(Metric::MaMCL, longest);
  v.set(Metric::MeMCL, m.message_chains.empty() ? 0.0 : total / static_cast<double>(m.message_chains.size()));
  return v;
}

EntityMetricVector MetricCalculator::class_metrics(const ClassEntity& entity) const {
  const ClassEntity& cls = owned_class(entity);
  const auto family = lineage(cls.qualified_name);

  EntityMetricVector v;
  v.release = model_.release_id();
  v.kind = EntityKind::Class;
  v.qualified_name = cls.qualified_name;
  v.package = cls.package_name();

  const int loc = cls.source_span.end_line - cls.source_span.start_line + 1;
  int accessor_loc = 0;
  int accessors = 0;
  double wmc = 0;
  int public_methods = 0;
  int functional_public = 0;
  std::set<AttributeRef> foreign;
  std::set<CallTarget> external_calls;
  for (const auto& m : cls.methods) {
    if (m.is_accessor) {
      ++accessors;
      accessor_loc += m.end_line - m.start_line + 1;
    } else {
      wmc += 1 + m.decision_points;
    }
    if (m.visibility == Visibility::Public && !m.is_constructor) {
      ++public_methods;
      if (!m.is_accessor && !m.is_abstract) ++functional_public;
    }
    for (const auto& a : touched_attributes(m)) {
      if (!family.count(a.owner)) foreign.insert(a);
    }
    for (const auto& call : m.calls) {
      if (call.target_class != cls.qualified_name) external_calls.insert(call);
    }
  }
  int public_attributes = 0;
  for (const auto& a : cls.attributes) {
    if (a.visibility == Visibility::Public && !a.is_static) ++public_attributes;
  }

  v.set(Metric::LOC, loc);
  v.set(Metric::LOCNAMM, std::max(0, loc - accessor_loc));
  v.set(Metric::NOAM, accessors);
  v.set(Metric::NOMNAMM, static_cast<double>(cls.methods.size()) - accessors);
  v.set(Metric::WMCNAMM, wmc);
  v.set(Metric::NOPA, public_attributes);
  v.set(Metric::ATFD, static_cast<double>(foreign.size()));
  const int public_members = public_methods + public_attributes;
  v.set(Metric::WOC, public_members == 0 ? 0.0 : static_cast<double>(functional_public) / public_members);

  // Cohesion over non-constructor methods.
  std::vector<std::set<std::string>> direct;
  std::vector<std::set<std::string>> closure;
  for (const auto& m : cls.methods) {
    if (m.is_constructor) continue;
    std::set<std::string> own;
    for (const auto& a : m.accessed_attributes) {
      if (a.owner == cls.qualified_name) own.insert(a.name);
    }
    std::set<std::string> instance_only;
    for (const auto& name : own) {
      for (const auto& attr : cls.attributes) {
        if (attr.name == name && !attr.is_static) instance_only.insert(name);
      }
    }
    direct.push_back(std::move(instance_only));
    closure.push_back(instance_attributes_closure(cls, m));
  }
  auto shares = [](const std::set<std::string>& a, const std::set<std::string>& b) {
    return std::any_of(a.begin(), a.end(), [&](const std::string& x) { return b.count(x) != 0; });
  };
  std::size_t pairs = 0;
  std::size_t connected = 0;
  std::size_t sharing = 0;
  for (std::size_t i = 0; i < direct.size(); ++i) {
    for (std::size_t j = i + 1; j < direct.size(); ++j) {
      ++pairs;
      if (shares(closure[i], closure[j])) ++connected;
      if (shares(direct[i], direct[j])) ++sharing;
    }
  }
  v.set(Metric::TCC, pairs == 0 ? 0.0 : static_cast<double>(connected) / static_cast<double>(pairs));
  v.set(Metric::LCOM, static_cast<double>(pairs - sharing > sharing ? (pairs - sharing) - sharing : 0));

  v.set(Metric::CBO, static_cast<double>(cls.referenced_classes.size()));
  v.set(Metric::RFC, static_cast<double>(cls.methods.size() + external_calls.size()));
  v.set(Metric::DIT, depth_of_inheritance(cls));
  return v;
}

SmFeatures MetricCalculator::sm_features(const ClassEntity& cls) const {
  const auto v = class_metrics(cls);
  return {*v.get(Metric::CBO), *v.get(Metric::RFC), *v.get(Metric::DIT), *v.get(Metric::LCOM),
          *v.get(Metric::LOC)};
}

std::vector<EntityMetricVector> MetricCalculator::release_metrics() const {
  std::vector<EntityMetricVector> out;
  for (const auto& c : model_.classes()) {
    out.push_back(class_metrics(c));
    for (const auto& m : c.methods) out.push_back(method_metrics(m));
  }
  return out;
}

EntityMetricVector compute_entity_metrics(const CodeModel& model, const ClassEntity& cls) {
  return MetricCalculator(model).class_metrics(cls);
}

EntityMetricVector compute_entity_metrics(const CodeModel& model, const MethodEntity& method) {
  return MetricCalculator(model).method_metrics(method);
}

SmFeatures compute_sm_features(const CodeModel& model, const ClassEntity& cls) {
  return MetricCalculator(model).sm_features(cls);
}

std::vector<EntityMetricVector> compute_release_metrics(const CodeModel& model) {
  return MetricCalculator(model).release_metrics();
}

}  // namespace smellscope

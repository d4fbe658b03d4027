#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace smellscope {

// Base for every recoverable failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Missing files, unresolvable tags, unreadable directories.
class InputError : public Error {
 public:
  using Error::Error;
};

class EmptyModelError : public Error {
 public:
  using Error::Error;
};

// A referenced entity/metric/distribution does not exist where it must.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// A caller broke an operation's precondition.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

// Malformed input with an optional location. row/column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(std::string message, std::string source = {}, std::size_t row = 0,
             std::string column = {})
      : Error(format(message, source, row, column)),
        source_(std::move(source)),
        row_(row),
        column_(std::move(column)) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t row() const noexcept { return row_; }
  const std::string& column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, const std::string& source,
                            std::size_t row, const std::string& column) {
    std::string out;
    if (!source.empty()) out += source + ": ";
    if (row != 0) out += "row " + std::to_string(row) + ": ";
    if (!column.empty()) out += "column " + column + ": ";
    return out + message;
  }

  std::string source_;
  std::size_t row_;
  std::string column_;
};

class IncompleteVectorError : public Error {
 public:
  IncompleteVectorError(std::string entity, std::string metric)
      : Error("metric " + metric + " missing for entity '" + entity + "'"),
        entity_(std::move(entity)),
        metric_(std::move(metric)) {}

  const std::string& entity() const noexcept { return entity_; }
  const std::string& metric() const noexcept { return metric_; }

 private:
  std::string entity_;
  std::string metric_;
};

class JoinError : public Error {
 public:
  explicit JoinError(std::vector<std::string> orphans)
      : Error(describe(orphans)), orphans_(std::move(orphans)) {}

  const std::vector<std::string>& orphans() const noexcept { return orphans_; }

 private:
  static std::string describe(const std::vector<std::string>& orphans) {
    std::string msg = "join failed; orphan keys:";
    for (const auto& o : orphans) msg += " " + o;
    return msg;
  }

  std::vector<std::string> orphans_;
};

class EmptyDatasetError : public Error {
 public:
  using Error::Error;
};

class DegenerateTrainingError : public Error {
 public:
  using Error::Error;
};

class StratificationError : public Error {
 public:
  using Error::Error;
};

class UndefinedMetricError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> fields)
      : Error(describe(fields)), fields_(std::move(fields)) {}

  const std::vector<std::string>& fields() const noexcept { return fields_; }

 private:
  static std::string describe(const std::vector<std::string>& fields) {
    std::string msg = "invalid configuration:";
    for (const auto& f : fields) msg += "\n  " + f;
    return msg;
  }

  std::vector<std::string> fields_;
};

class StageError : public Error {
 public:
  StageError(std::string stage, std::string key, const std::string& what)
      : Error("stage '" + stage + "' failed" + (key.empty() ? "" : " for '" + key + "'") +
              ": " + what),
        stage_(std::move(stage)),
        key_(std::move(key)) {}

  const std::string& stage() const noexcept { return stage_; }
  const std::string& key() const noexcept { return key_; }

 private:
  std::string stage_;
  std::string key_;
};

}  // namespace smellscope

// caeval/errors.hpp

// Copyright 2026  caeval authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef CAEVAL_ERRORS_HPP_
#define CAEVAL_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace caeval {

/// Base class of every error the toolkit raises on bad input or
/// unscorable data.  Programming mistakes (violated preconditions of the
/// library API itself) use the standard logic errors instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A lexicon, rule, template or inventory file is malformed or names an
/// unknown attribute/category.  Carries file and line for diagnostics.
class ConfigError : public Error {
 public:
  ConfigError(const std::string &file, std::size_t line,
              const std::string &reason)
      : Error(file + ":" + std::to_string(line) + ": " + reason) {}
  explicit ConfigError(const std::string &reason) : Error(reason) {}
};

/// A corpus file violates the record grammar.
class FormatError : public Error {
 public:
  FormatError(const std::string &file, std::size_t line,
              const std::string &reason)
      : Error(file + ":" + std::to_string(line) + ": " + reason) {}
};

/// An annotation unit has no ":" separator or an empty attribute/value.
class MalformedUnitError : public Error {
 public:
  explicit MalformedUnitError(const std::string &unit_text)
      : Error("malformed semantic unit: \"" + unit_text + "\"") {}
  MalformedUnitError(const std::string &unit_text, const std::string &reason)
      : Error("malformed semantic unit: \"" + unit_text + "\" (" + reason +
              ")") {}
};

/// An annotation names an attribute missing from the inventory.
class UnknownAttributeError : public Error {
 public:
  explicit UnknownAttributeError(const std::string &name)
      : Error("unknown attribute: " + name), name_(name) {}
  const std::string &name() const { return name_; }

 private:
  std::string name_;
};

/// Accuracy over an empty reference is undefined (division by zero).
class EmptyReferenceError : public Error {
 public:
  EmptyReferenceError() : Error("empty reference: accuracy is undefined") {}
};

/// Every record of a corpus was skipped; no aggregate can be formed.
class NoScorableRecordsError : public Error {
 public:
  NoScorableRecordsError() : Error("no scorable records in corpus") {}
};

/// Least-squares input whose x values are all equal (or fewer than two
/// points): the fitted line is not determined.
class DegenerateInputError : public Error {
 public:
  explicit DegenerateInputError(const std::string &reason)
      : Error("degenerate fit input: " + reason) {}
};

/// The corruption vocabulary is empty but error events were requested.
class EmptyVocabularyError : public Error {
 public:
  EmptyVocabularyError() : Error("corruption vocabulary is empty") {}
};

}  // namespace caeval

#endif  // CAEVAL_ERRORS_HPP_

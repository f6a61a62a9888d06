// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace uavcov {

// Root of every exception thrown by the library.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (non-finite,
// non-positive where positivity is required, ...).
class DomainError : public Error
{
  public:
    using Error::Error;
};

// Node placement that makes a link budget undefined (coincident nodes).
class GeometryError : public Error
{
  public:
    using Error::Error;
};

// A coverage model whose formulas are undefined, e.g. zero interferer density.
class ModelError : public Error
{
  public:
    using Error::Error;
};

// Quadrature or estimator failed to reach the requested accuracy.
class NumericalError : public Error
{
  public:
    NumericalError(const std::string& what, double achieved_error)
        : Error(what), achieved_error_(achieved_error)
    {}

    double achieved_error() const noexcept { return achieved_error_; }

  private:
    double achieved_error_;
};

// Monte Carlo work that would exceed the configured point budget.
class ResourceError : public Error
{
  public:
    using Error::Error;
};

// Scenario document rejected; key_path names the offending key ("irs.elements").
class ValidationError : public Error
{
  public:
    ValidationError(std::string key_path, const std::string& message)
        : Error(key_path.empty() ? message : key_path + ": " + message),
          key_path_(std::move(key_path))
    {}

    const std::string& key_path() const noexcept { return key_path_; }

  private:
    std::string key_path_;
};

class CatalogError : public Error
{
  public:
    CatalogError(const std::string& what, std::vector<std::string> valid_names)
        : Error(what), valid_names_(std::move(valid_names))
    {}

    const std::vector<std::string>& valid_names() const noexcept { return valid_names_; }

  private:
    std::vector<std::string> valid_names_;
};

class IoError : public Error
{
  public:
    using Error::Error;
};

}  // namespace uavcov

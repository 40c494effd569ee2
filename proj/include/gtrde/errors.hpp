#ifndef GTRDE_ERRORS_HPP
#define GTRDE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gtrde {

// Base class for everything this library throws.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- linear algebra ---

class InvalidMatrix : public Error {
public:
  explicit InvalidMatrix(const std::string& what) : Error(what) {}
};

class SingularBlock : public Error {
public:
  explicit SingularBlock(const std::string& what) : Error(what) {}
};

// --- problem definition / parsing ---

class InvalidProblem : public Error {
public:
  explicit InvalidProblem(const std::string& what) : Error(what) {}
};

class InvalidMode : public Error {
public:
  explicit InvalidMode(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
  ParseError(const std::string& path, const std::string& what)
      : Error(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

private:
  std::string path_;
};

// --- kernel / solver ---

class InvalidOperand : public Error {
public:
  explicit InvalidOperand(const std::string& what) : Error(what) {}
};

class SingularInnerBlock : public Error {
public:
  SingularInnerBlock(int mode, double t, const std::string& what)
      : Error(what), mode_(mode), t_(t) {}
  int mode() const { return mode_; }
  double time() const { return t_; }

private:
  int mode_;
  double t_;
};

class SignConditionLost : public Error {
public:
  SignConditionLost(int step, double t, int mode, const std::string& what)
      : Error(what), step_(step), t_(t), mode_(mode) {}
  int step() const { return step_; }
  double time() const { return t_; }
  int mode() const { return mode_; }

private:
  int step_;
  double t_;
  int mode_;
};

class NonFiniteState : public Error {
public:
  explicit NonFiniteState(const std::string& what) : Error(what) {}
};

class NoConvergence : public Error {
public:
  NoConvergence(int steps, double last_change, const std::string& what)
      : Error(what), steps_(steps), last_change_(last_change) {}
  int steps() const { return steps_; }
  double last_change() const { return last_change_; }

private:
  int steps_;
  double last_change_;
};

class InnerFailure : public Error {
public:
  InnerFailure(int step, int mode, const std::string& what)
      : Error(what), step_(step), mode_(mode) {}
  int step() const { return step_; }
  int mode() const { return mode_; }

private:
  int step_;
  int mode_;
};

class AssumptionViolation : public Error {
public:
  explicit AssumptionViolation(const std::string& what) : Error(what) {}
};

class MonotonicityViolation : public Error {
public:
  MonotonicityViolation(int step, double margin, const std::string& what)
      : Error(what), step_(step), margin_(margin) {}
  int step() const { return step_; }
  double margin() const { return margin_; }

private:
  int step_;
  double margin_;
};

class UnsupportedTimeVarying : public Error {
public:
  explicit UnsupportedTimeVarying(const std::string& what) : Error(what) {}
};

class NumericalFailure : public Error {
public:
  explicit NumericalFailure(const std::string& what) : Error(what) {}
};

class IoError : public Error {
public:
  explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace gtrde

#endif  // GTRDE_ERRORS_HPP

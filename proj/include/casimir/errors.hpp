#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

// Every failure the library reports derives from Error so callers (the CLI in
// particular) can map them to exit codes in one place.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class MissingVariable : public Error {
public:
  using Error::Error;
};

class NotSquare : public Error {
public:
  using Error::Error;
};

class SingularSystem : public Error {
public:
  using Error::Error;
};

class DenominatorVanishes : public Error {
public:
  using Error::Error;
};

class InvalidSize : public Error {
public:
  using Error::Error;
};

class SingularGroupElement : public Error {
public:
  using Error::Error;
};

class UnsupportedKind : public Error {
public:
  using Error::Error;
};

class NonlinearSystem : public Error {
public:
  using Error::Error;
};

class ResidualXEquations : public Error {
public:
  using Error::Error;
};

class MinorVanishes : public Error {
public:
  using Error::Error;
};

class DegeneratePoint : public Error {
public:
  using Error::Error;
};

class VerificationFailure : public Error {
public:
  using Error::Error;
};

class WordTooLong : public Error {
public:
  using Error::Error;
};

}  // namespace casimir

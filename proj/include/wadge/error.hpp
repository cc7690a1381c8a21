#pragma once

#include <stdexcept>
#include <string>

namespace wadge {

enum class ErrorKind {
  Mismatch,
  NotScattered,
  Unsupported,
  ResourceLimit,
  Parse,
  SingletonSpace,
  EmptySpace,
  MissingOracle,
  CertificateInvalid,
  IllegalMove,
  SectionMismatch,
  UnknownName,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::Mismatch: return "Mismatch";
    case ErrorKind::NotScattered: return "NotScattered";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::SingletonSpace: return "SingletonSpace";
    case ErrorKind::EmptySpace: return "EmptySpace";
    case ErrorKind::MissingOracle: return "MissingOracle";
    case ErrorKind::CertificateInvalid: return "CertificateInvalid";
    case ErrorKind::IllegalMove: return "IllegalMove";
    case ErrorKind::SectionMismatch: return "SectionMismatch";
    case ErrorKind::UnknownName: return "UnknownName";
  }
  return "?";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace wadge

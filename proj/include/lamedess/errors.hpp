#ifndef LAMEDESS_ERRORS_HPP
#define LAMEDESS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lamedess {

enum class Errc {
  NotAPermutation,
  NotConnected,
  OddEulerDefect,
  MarkMismatch,
  TableMismatch,
  NotASchwarzRow,
  DegenerateParent,
  InvalidTable,
  DegreeCapExceeded,
  ParseError,
  BadArgument,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotAPermutation:   return "NotAPermutation";
    case Errc::NotConnected:      return "NotConnected";
    case Errc::OddEulerDefect:    return "OddEulerDefect";
    case Errc::MarkMismatch:      return "MarkMismatch";
    case Errc::TableMismatch:     return "TableMismatch";
    case Errc::NotASchwarzRow:    return "NotASchwarzRow";
    case Errc::DegenerateParent:  return "DegenerateParent";
    case Errc::InvalidTable:      return "InvalidTable";
    case Errc::DegreeCapExceeded: return "DegreeCapExceeded";
    case Errc::ParseError:        return "ParseError";
    case Errc::BadArgument:       return "BadArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace lamedess

#endif

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fole {

using Id = std::string;

enum class Errc {
  UnknownId,
  IdentityLawViolation,
  AssociativityViolation,
  NonComposablePair,
  IncompleteComposition,
  CycleDetected,
  FunctorialityViolation,
  NaturalityViolation,
  EndpointMismatch,
  HomEnumerationUnavailable,
  InvalidFunction,
  SortConditionViolation,
  InfomorphismViolation,
  InvalidTable,
  SortDiagramMismatch,
  LaxDirectionBridge,
  MissingAdjunctionWitness,
  SortGluingConflict,
  TupleGluingInconsistent,
  InvalidCone,
  NoMediator,
  NonUniqueMediator,
  NoUniversalCone,
  StrictnessViolation,
  FiberNotCocomplete,
  UnsupportedVaryingTypeDomains,
  ParseError,
  ResolutionError,
  ValidationError,
};

inline const char* errc_name(Errc e) {
  switch (e) {
    case Errc::UnknownId: return "UnknownId";
    case Errc::IdentityLawViolation: return "IdentityLawViolation";
    case Errc::AssociativityViolation: return "AssociativityViolation";
    case Errc::NonComposablePair: return "NonComposablePair";
    case Errc::IncompleteComposition: return "IncompleteComposition";
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::FunctorialityViolation: return "FunctorialityViolation";
    case Errc::NaturalityViolation: return "NaturalityViolation";
    case Errc::EndpointMismatch: return "EndpointMismatch";
    case Errc::HomEnumerationUnavailable: return "HomEnumerationUnavailable";
    case Errc::InvalidFunction: return "InvalidFunction";
    case Errc::SortConditionViolation: return "SortConditionViolation";
    case Errc::InfomorphismViolation: return "InfomorphismViolation";
    case Errc::InvalidTable: return "InvalidTable";
    case Errc::SortDiagramMismatch: return "SortDiagramMismatch";
    case Errc::LaxDirectionBridge: return "LaxDirectionBridge";
    case Errc::MissingAdjunctionWitness: return "MissingAdjunctionWitness";
    case Errc::SortGluingConflict: return "SortGluingConflict";
    case Errc::TupleGluingInconsistent: return "TupleGluingInconsistent";
    case Errc::InvalidCone: return "InvalidCone";
    case Errc::NoMediator: return "NoMediator";
    case Errc::NonUniqueMediator: return "NonUniqueMediator";
    case Errc::NoUniversalCone: return "NoUniversalCone";
    case Errc::StrictnessViolation: return "StrictnessViolation";
    case Errc::FiberNotCocomplete: return "FiberNotCocomplete";
    case Errc::UnsupportedVaryingTypeDomains: return "UnsupportedVaryingTypeDomains";
    case Errc::ParseError: return "ParseError";
    case Errc::ResolutionError: return "ResolutionError";
    case Errc::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

// Composite identifiers: "(a,b,...)" with '\', ',', '(' and ')' escaped inside parts.
inline std::string tuple_id(const std::vector<Id>& parts) {
  std::string out = "(";
  for (std::size_t n = 0; n < parts.size(); ++n) {
    if (n) out += ',';
    for (char c : parts[n]) {
      if (c == '\\' || c == ',' || c == '(' || c == ')') out += '\\';
      out += c;
    }
  }
  out += ')';
  return out;
}

inline std::string pair_id(const Id& a, const Id& b) { return tuple_id({a, b}); }

// Inverse of tuple_id; false on malformed input.
inline bool split_tuple_id(const std::string& s, std::vector<Id>& parts) {
  parts.clear();
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') return false;
  std::string cur;
  bool any = false;
  for (std::size_t n = 1; n + 1 < s.size(); ++n) {
    char c = s[n];
    if (c == '\\') {
      if (n + 2 >= s.size()) return false;
      cur += s[++n];
      any = true;
    } else if (c == ',') {
      parts.push_back(cur);
      cur.clear();
      any = true;
    } else if (c == '(' || c == ')') {
      return false;
    } else {
      cur += c;
      any = true;
    }
  }
  if (any || s.size() > 2) parts.push_back(cur);
  return true;
}

template <class K, class V>
const V& lookup(const std::map<K, V>& m, const K& k, const char* what) {
  auto it = m.find(k);
  if (it == m.end()) fail(Errc::UnknownId, std::string(what) + " has no entry for '" + k + "'");
  return it->second;
}

}  // namespace fole

#pragma once

#include <doctest.h>

#include <optional>
#include <string>

#include "fltree/error.hpp"
#include "fltree/operations.hpp"
#include "fltree/tree.hpp"

namespace support {

// The worked example used throughout: link-and-cut distance 4, permutation
// distance 6, rearrangement distance 3.
inline const std::string kFirst = "((d,e,f)b,(g,h)c)a;";
inline const std::string kSecond = "((b,e)d,(g,f,h)c)a;";

inline fltree::LabelledTree first() { return fltree::parse_tree(kFirst); }
inline fltree::LabelledTree second() { return fltree::parse_tree(kSecond); }

inline fltree::LinkCutOp move(const char* child, const char* from, const char* to) {
  return {child, from, to};
}

inline fltree::Permutation perm(std::map<fltree::Label, fltree::Label> mapping) {
  return fltree::Permutation(std::move(mapping));
}

// Kind of the fltree::Error thrown by f, or nullopt if it returns normally.
template <class F>
std::optional<fltree::ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (const fltree::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

template <class F>
std::optional<std::size_t> parse_error_position(F&& f) {
  try {
    f();
  } catch (const fltree::ParseError& e) {
    return e.position();
  }
  return std::nullopt;
}

}  // namespace support

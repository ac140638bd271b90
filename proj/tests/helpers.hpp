#pragma once

#include "superleib/scalar.hpp"

#include <string>

// Kind tag of the superleib::Error thrown by f, or "" when nothing is thrown.
template <class F>
std::string error_kind(F&& f) {
  try {
    f();
  } catch (const superleib::Error& e) {
    return e.kind();
  }
  return "";
}

#pragma once

#include "curvelink/fixture.hpp"

#include <string>

#ifndef CURVELINK_DATA_DIR
#error "CURVELINK_DATA_DIR must point at the fixture directory"
#endif

namespace testdata {

inline std::string path(const std::string& name) { return std::string(CURVELINK_DATA_DIR) + "/" + name; }

inline const curvelink::fixture::FixtureDocument& tangent_cubic() {
  static const auto doc = curvelink::fixture::load_fixture(path("tangent_cubic.curve"));
  return doc;
}

inline const curvelink::fixture::FixtureDocument& c7() {
  static const auto doc = curvelink::fixture::load_fixture(path("c7.curve"));
  return doc;
}

} // namespace testdata

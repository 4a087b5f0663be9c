// Copyright 2026 the dtc-lab authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0

#ifndef DTC_STATE_IO_HPP
#define DTC_STATE_IO_HPP

#include <iosfwd>
#include <string>

#include "dtc/state.hpp"

namespace dtc {

// On-disk state format: { "dims": [...], "labels": [...]?, "matrix":
// [[[re, im], ...], ...] } row-major dense. Written at full precision.

MultipartiteState read_state(std::istream& in);
MultipartiteState read_state_file(const std::string& path);

void write_state(std::ostream& out, const MultipartiteState& s);
void write_state_file(const std::string& path, const MultipartiteState& s);

}  // namespace dtc

#endif

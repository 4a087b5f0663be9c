// Copyright 2026 the dtc-lab authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0

#include "dtc/state_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace dtc {

using nlohmann::json;

MultipartiteState read_state(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("state file: ") + e.what());
    }

    if (!doc.is_object() || !doc.contains("dims") || !doc.contains("matrix"))
        throw ParseError("state file: expected object with 'dims' and 'matrix'");

    std::vector<int> dims;
    for (const auto& d : doc.at("dims")) {
        if (!d.is_number_integer() || d.get<long long>() < 1)
            throw ParseError("state file: dims must be positive integers");
        dims.push_back(d.get<int>());
    }

    std::vector<std::string> labels;
    if (doc.contains("labels"))
        for (const auto& l : doc.at("labels")) labels.push_back(l.get<std::string>());

    const auto& rows = doc.at("matrix");
    if (!rows.is_array() || rows.empty())
        throw ParseError("state file: matrix must be a nonempty array of rows");
    const std::size_t dim = rows.size();
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const auto& row = rows.at(i);
        if (!row.is_array() || row.size() != dim)
            throw ParseError("state file: matrix row " + std::to_string(i) +
                             " has wrong length");
        for (std::size_t j = 0; j < dim; ++j) {
            const auto& e = row.at(j);
            if (!e.is_array() || e.size() != 2)
                throw ParseError("state file: entry (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") must be [re, im]");
            m(i, j) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
        }
    }
    return make_state(std::move(m), std::move(dims), std::move(labels));
}

MultipartiteState read_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open state file: " + path);
    return read_state(in);
}

void write_state(std::ostream& out, const MultipartiteState& s) {
    json doc;
    doc["dims"] = s.dims();
    doc["labels"] = s.labels();
    json rows = json::array();
    for (int i = 0; i < s.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < s.dim(); ++j) {
            const Complex v = s.matrix()(i, j);
            row.push_back({v.real(), v.imag()});
        }
        rows.push_back(std::move(row));
    }
    doc["matrix"] = std::move(rows);
    out << doc.dump() << '\n';
}

void write_state_file(const std::string& path, const MultipartiteState& s) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open output file: " + path);
    write_state(out, s);
}

}  // namespace dtc

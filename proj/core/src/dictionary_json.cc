// Copyright 2026 The dictenc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "json.hpp"

#include "dictenc/dictionary.h"
#include "dictenc/errors.h"

namespace dictenc {
namespace {

using nlohmann::json;

json items_to_json(unsigned n, const std::vector<DataItem> &items) {
    json out;
    out["n"] = n;
    out["items"] = json::array();
    for (const auto &item : items) {
        json map = json::array();
        for (const auto &[col, row] : item.rows_by_column) {
            map.push_back({col, row});
        }
        out["items"].push_back({{"value", {item.value.real(), item.value.imag()}}, {"map", std::move(map)}});
    }
    return out;
}

std::pair<unsigned, std::vector<DataItem>> items_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("dictionary JSON: ") + e.what());
    }
    try {
        unsigned n = doc.at("n").get<unsigned>();
        std::vector<DataItem> items;
        for (const auto &entry : doc.at("items")) {
            const auto &value = entry.at("value");
            if (!value.is_array() || value.size() != 2) {
                throw ParseError("dictionary JSON: item value must be [re, im]");
            }
            DataItem item{Complex(value[0].get<double>(), value[1].get<double>()), {}};
            for (const auto &pair : entry.at("map")) {
                if (!pair.is_array() || pair.size() != 2) {
                    throw ParseError("dictionary JSON: map entries must be [j, i]");
                }
                auto col = pair[0].get<Index>();
                auto row = pair[1].get<Index>();
                if (!item.rows_by_column.emplace(col, row).second) {
                    throw ParseError("dictionary JSON: column " + std::to_string(col) + " listed twice in item " +
                                     std::to_string(items.size()));
                }
            }
            items.push_back(std::move(item));
        }
        return {n, std::move(items)};
    } catch (const json::exception &e) {
        throw ParseError(std::string("dictionary JSON: ") + e.what());
    }
}

}  // namespace

std::string dictionary_to_json(const Dictionary &d) {
    return items_to_json(d.n, d.items).dump(2) + "\n";
}

Dictionary dictionary_from_json(std::string_view text) {
    auto [n, items] = items_from_json(text);
    Dictionary d{n, std::move(items)};
    if (auto report = validate(d); !report.ok()) {
        throw ParseError("dictionary JSON failed validation:\n" + report.summary());
    }
    return d;
}

std::string hermitian_dictionary_to_json(const HermitianDictionary &d) {
    json out = items_to_json(d.n, d.items);
    out["kind"] = "hermitian";
    return out.dump(2) + "\n";
}

HermitianDictionary hermitian_dictionary_from_json(std::string_view text) {
    auto [n, items] = items_from_json(text);
    HermitianDictionary d{n, std::move(items)};
    if (auto report = validate(d); !report.ok()) {
        throw ParseError("hermitian dictionary JSON failed validation:\n" + report.summary());
    }
    return d;
}

}  // namespace dictenc

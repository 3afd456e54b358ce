#include "symlab/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <string>

namespace symlab {

void RatedDataset::add(Word word, double rating) {
    domain_.require(word);
    if (!std::isfinite(rating)) {
        throw Error("ratings must be finite");
    }
    pairs_.push_back(RatedWord{std::move(word), rating});
}

void RatedDataset::add(std::string_view word_text, double rating) {
    add(domain_.parse(word_text), rating);
}

namespace {

// (rank, rating) projection; sorting it gives a canonical multiset form
std::vector<std::pair<std::size_t, double>> canonical(const RatedDataset& data) {
    std::vector<std::pair<std::size_t, double>> keys;
    keys.reserve(data.size());
    for (const RatedWord& p : data) {
        keys.emplace_back(data.domain().rank(p.word), p.rating);
    }
    std::sort(keys.begin(), keys.end());
    return keys;
}

} // namespace

bool RatedDataset::multiset_equal(const RatedDataset& other) const {
    if (!(domain_ == other.domain_) || pairs_.size() != other.pairs_.size()) {
        return false;
    }
    return canonical(*this) == canonical(other);
}

RatedDataset apply_to_dataset(const Symmetry& sigma, const RatedDataset& data) {
    if (!(sigma.domain() == data.domain())) {
        throw DomainError("symmetry and dataset live on different domains");
    }
    RatedDataset out(data.domain());
    for (const RatedWord& p : data) {
        out.add(sigma.apply(p.word), p.rating);
    }
    return out;
}

bool is_dataset_invariant(const Symmetry& sigma, const RatedDataset& data) {
    return apply_to_dataset(sigma, data).multiset_equal(data);
}

void save_dataset_csv(const RatedDataset& data, std::ostream& out) {
    out << "word,rating\n";
    char buf[40];
    for (const RatedWord& p : data) {
        std::snprintf(buf, sizeof buf, "%.17g", p.rating);
        out << data.domain().format(p.word) << ',' << buf << '\n';
    }
}

RatedDataset load_dataset_csv(const WordDomain& domain, std::istream& in) {
    RatedDataset data(domain);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line == "word,rating") continue; // header optional
        }
        const std::size_t comma = line.find(',');
        if (comma == std::string::npos) {
            throw Error("malformed dataset row '" + line + "'");
        }
        const std::string word = line.substr(0, comma);
        char* end = nullptr;
        const double rating = std::strtod(line.c_str() + comma + 1, &end);
        if (end == line.c_str() + comma + 1) {
            throw Error("malformed rating in row '" + line + "'");
        }
        data.add(word, rating);
    }
    return data;
}

} // namespace symlab

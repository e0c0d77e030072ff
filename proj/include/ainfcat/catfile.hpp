#pragma once

#include "ainfcat/constructions.hpp"

namespace ainfcat {

struct ParseError : std::runtime_error {
    ParseError(int line, int col, const std::string& msg)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
          line(line),
          col(col) {}
    int line, col;
};

struct NamedCategory {
    std::string name;
    AInfCategory cat;
    std::optional<Units> units;
};

struct NamedFunctor {
    std::string name, from, to;
    AInfFunctor f;
};

struct NamedDCoder {
    std::string name;
    std::string of_cat;                   // category when over (id, id)
    std::string over_f, over_g;           // functor names otherwise
    DoubleCoderivation r;
};

struct NamedModel {
    std::string name, for_cat, dg, functor;
    Units v;
};

/// Parsed category-definition file: named category, functor,
/// double-coderivation, and dg-model blocks, fully resolved against each
/// other.
struct Document {
    std::vector<NamedCategory> categories;
    std::vector<NamedFunctor> functors;
    std::vector<NamedDCoder> dcoders;
    std::vector<NamedModel> models;

    const NamedCategory& category(const std::string& name) const;
    const NamedFunctor& functor(const std::string& name) const;
    const NamedDCoder& dcoder(const std::string& name) const;
    const NamedModel& model(const std::string& name) const;
};

/// Parse a category-definition file. Throws ParseError with line:col on
/// malformed input, dangling references, non-prime characteristics, or
/// zero denominators.
Document parse_document(const std::string& text);

/// Canonical text form; parse(emit(parse(t))) equals parse(t).
std::string emit_document(const Document& doc);

/// Helpers for assembling documents from core objects.
NamedCategory make_named_category(std::string name, const AInfCategory& cat, std::optional<Units> units);
NamedFunctor make_named_functor(std::string name, std::string from, std::string to, const AInfFunctor& f);

}  // namespace ainfcat

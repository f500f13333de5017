#pragma once

#include <string>
#include <vector>

#include "moonshine/modular_forms.hpp"

namespace moonshine {

// A labeled trace series, normalized to q^-1 + 0 + O(q): valuation -1,
// leading coefficient 1, constant term 0.
struct McKayThompsonSeries {
    std::string class_label;
    LaurentSeries expansion;
    std::string group_description;
};

// Enforce the q^-1 + O(q) normalization: negate if the leading
// coefficient is -1, then subtract the constant term. The series must
// have valuation -1 and unit leading coefficient.
LaurentSeries normalize(const LaurentSeries& series);

// Recipe for one conjugacy-class series: an eta quotient f, optionally
// completed to f + k/f before normalization (k = 0 means plain f).
struct HauptmodulRecipe {
    std::string label;
    std::string group_description;
    EtaQuotientSpec quotient;
    BigInt add_scaled_inverse{0};
};

// Built-in table (classes 2A, 2B) plus any recipes merged from data
// files, so new labels need no code change. Class 1A is j - 744 and is
// handled directly.
class ClassTable {
public:
    static ClassTable builtin();
    // Merge recipes from a JSON file ({"classes": [...]}); duplicate
    // labels override.
    void load(const std::string& path);

    const HauptmodulRecipe* find(const std::string& label) const;
    const std::vector<HauptmodulRecipe>& recipes() const { return recipes_; }

private:
    std::vector<HauptmodulRecipe> recipes_;
};

// Series heads for 1A, 2A, 2B (or any label present in `table`).
// Unknown labels are rejected.
McKayThompsonSeries mckay_thompson(const std::string& label, long order,
                                   const ClassTable& table = ClassTable::builtin());

}  // namespace moonshine

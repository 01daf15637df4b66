#include "psc/signature.hpp"

#include <cctype>
#include <set>
#include <stdexcept>

namespace psc {

bool is_valid_identifier(std::string_view text) {
    if (text.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(text[0]))) return false;
    for (char c : text.substr(1))
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

Signature::Signature(std::vector<std::string> names, std::vector<bool> invertible)
    : names_(std::move(names)), invertible_(std::move(invertible)) {
    if (names_.empty()) throw std::invalid_argument("signature must name at least one variable");
    if (invertible_.size() != names_.size())
        throw std::invalid_argument("signature flag list does not match variable list");
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (!is_valid_identifier(n))
            throw std::invalid_argument("invalid variable name: '" + n + "'");
        if (!seen.insert(n).second)
            throw std::invalid_argument("duplicate variable name: '" + n + "'");
    }
}

std::shared_ptr<const Signature> Signature::polynomial(std::vector<std::string> names) {
    std::vector<bool> inv(names.size(), false);
    return std::make_shared<const Signature>(std::move(names), std::move(inv));
}

std::shared_ptr<const Signature> Signature::make(std::vector<std::string> names,
                                                 std::vector<bool> invertible) {
    return std::make_shared<const Signature>(std::move(names), std::move(invertible));
}

std::optional<std::size_t> Signature::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

void require_same_signature(const SignaturePtr& a, const SignaturePtr& b, const char* op) {
    if (a.get() == b.get()) return;
    if (a && b && *a == *b) return;
    throw std::invalid_argument(std::string(op) + ": operands have different signatures");
}

}  // namespace psc

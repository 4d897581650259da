#include "ygraph/partitions.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>

namespace ygraph {

YoungDiagram::YoungDiagram(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
            throw DomainError("parts of a Young diagram must be weakly decreasing and nonnegative");
        size_ += parts_[i];
    }
}

int YoungDiagram::column(int j) const {
    if (j < 1) return 0;
    int len = 0;
    while (len < length() && parts_[len] >= j) ++len;
    return len;
}

YoungDiagram conjugate(const YoungDiagram& lambda) {
    std::vector<int> cols(lambda.empty() ? 0 : lambda.row(1), 0);
    for (int part : lambda.parts())
        for (int j = 0; j < part; ++j) ++cols[j];
    return YoungDiagram(std::move(cols));
}

int hook_length(const YoungDiagram& lambda, const Box& b) {
    if (!lambda.contains(b)) throw DomainError("box is not in the diagram");
    return lambda.row(b.row) + lambda.column(b.col) - b.row - b.col + 1;
}

Integer dim(const YoungDiagram& lambda) {
    YoungDiagram conj = conjugate(lambda);
    Integer hooks = 1;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.row(i); ++j) hooks *= lambda.row(i) + conj.row(j) - i - j + 1;
    Integer n_fact = factorial(static_cast<unsigned long>(lambda.size()));
    if (!mpz_divisible_p(n_fact.get_mpz_t(), hooks.get_mpz_t()))
        throw std::logic_error("hook product does not divide n!");
    Integer result;
    mpz_divexact(result.get_mpz_t(), n_fact.get_mpz_t(), hooks.get_mpz_t());
    return result;
}

Integer dim_by_paths(const YoungDiagram& lambda) {
    std::map<YoungDiagram, Integer> memo;
    std::function<Integer(const YoungDiagram&)> count = [&](const YoungDiagram& mu) -> Integer {
        if (mu.empty()) return 1;
        if (auto it = memo.find(mu); it != memo.end()) return it->second;
        Integer total = 0;
        for (const Box& b : removable(mu)) total += count(remove_box(mu, b));
        memo.emplace(mu, total);
        return total;
    };
    return count(lambda);
}

std::vector<Box> addable(const YoungDiagram& lambda) {
    std::vector<Box> out;
    for (int i = 1; i <= lambda.length() + 1; ++i) {
        if (i == 1 || lambda.row(i - 1) > lambda.row(i)) out.push_back({i, lambda.row(i) + 1});
    }
    return out;
}

std::vector<Box> removable(const YoungDiagram& lambda) {
    std::vector<Box> out;
    for (int i = 1; i <= lambda.length(); ++i) {
        if (lambda.row(i) > lambda.row(i + 1)) out.push_back({i, lambda.row(i)});
    }
    return out;
}

YoungDiagram add_box(const YoungDiagram& lambda, const Box& b) {
    if (b.col != lambda.row(b.row) + 1 || (b.row > 1 && lambda.row(b.row - 1) < b.col))
        throw DomainError("box is not addable");
    std::vector<int> parts = lambda.parts();
    if (b.row > lambda.length()) parts.push_back(1);
    else ++parts[b.row - 1];
    return YoungDiagram(std::move(parts));
}

YoungDiagram remove_box(const YoungDiagram& lambda, const Box& b) {
    if (b.col != lambda.row(b.row) || b.col == 0 || lambda.row(b.row + 1) >= b.col)
        throw DomainError("box is not removable");
    std::vector<int> parts = lambda.parts();
    --parts[b.row - 1];
    return YoungDiagram(std::move(parts));
}

std::optional<Box> edge_box(const YoungDiagram& lambda, const YoungDiagram& nu) {
    if (nu.size() != lambda.size() + 1) return std::nullopt;
    std::optional<Box> found;
    for (int i = 1; i <= nu.length(); ++i) {
        int diff = nu.row(i) - lambda.row(i);
        if (diff == 0) continue;
        if (diff != 1 || found) return std::nullopt;
        found = Box{i, nu.row(i)};
    }
    if (lambda.length() > nu.length()) return std::nullopt;
    return found;
}

bool is_hook(const YoungDiagram& lambda) { return lambda.row(2) <= 1; }

std::vector<Rational> FrobeniusCoords::modified_p() const {
    std::vector<Rational> out;
    for (int v : p) out.emplace_back(Rational(2 * v + 1, 2));
    return out;
}

std::vector<Rational> FrobeniusCoords::modified_q() const {
    std::vector<Rational> out;
    for (int v : q) out.emplace_back(Rational(2 * v + 1, 2));
    return out;
}

FrobeniusCoords frobenius(const YoungDiagram& lambda) {
    if (lambda.empty()) throw DomainError("Frobenius coordinates of the empty diagram");
    YoungDiagram conj = conjugate(lambda);
    FrobeniusCoords fc;
    for (int i = 1; lambda.row(i) >= i; ++i) {
        fc.p.push_back(lambda.row(i) - i);
        fc.q.push_back(conj.row(i) - i);
    }
    return fc;
}

int level_k(const YoungDiagram& lambda, int k) {
    // boxes (i, i - k)
    int count = 0;
    for (int i = std::max(1, 1 + k); i <= lambda.length(); ++i) {
        if (lambda.row(i) >= i - k) ++count;
        else break;
    }
    return count;
}

bool in_Ypq(const YoungDiagram& lambda, int p, int q) {
    if (p < 0 || q < 0) return false;
    bool has_rectangle = p == 0 || q == 0 || lambda.row(p) >= q;
    return has_rectangle && lambda.row(p + 1) <= q;
}

BlockId block_of(const YoungDiagram& lambda, int k) {
    if (lambda.empty()) return {0, 0};
    int l = level_k(lambda, k);
    return k >= 0 ? BlockId{l + k, l} : BlockId{l, l - k};
}

std::pair<YoungDiagram, YoungDiagram> split_pm(const YoungDiagram& lambda, int p, int q) {
    if (!in_Ypq(lambda, p, q)) throw DomainError("diagram is not in the block Y(p,q)");
    std::vector<int> plus, minus;
    for (int i = 1; i <= p; ++i) plus.push_back(lambda.row(i) - q);
    for (int j = 1; j <= q; ++j) minus.push_back(lambda.column(j) - p);
    return {YoungDiagram(std::move(plus)), YoungDiagram(std::move(minus))};
}

YoungDiagram join_pm(const YoungDiagram& plus, const YoungDiagram& minus, int p, int q) {
    if (plus.length() > p || minus.length() > q) throw DomainError("too many rows for the block");
    std::vector<int> cols(q);
    for (int j = 1; j <= q; ++j) cols[j - 1] = minus.row(j) + p;
    YoungDiagram bottom_left = conjugate(YoungDiagram(cols));
    std::vector<int> parts;
    for (int i = 1; i <= p; ++i) parts.push_back(plus.row(i) + q);
    for (int i = p + 1; i <= bottom_left.length(); ++i) parts.push_back(bottom_left.row(i));
    return YoungDiagram(std::move(parts));
}

YoungDiagram rectangle(int p, int q) {
    if (p <= 0 || q <= 0) return {};
    return YoungDiagram(std::vector<int>(p, q));
}

namespace {

void generate(int remaining, int max_part, int rows_left, std::vector<int>& current,
              std::vector<YoungDiagram>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    if (rows_left == 0) return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        generate(remaining - part, part, rows_left - 1, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<YoungDiagram> partitions_of(int n) { return partitions_of(n, n); }

std::vector<YoungDiagram> partitions_of(int n, int max_rows) {
    std::vector<YoungDiagram> out;
    if (n < 0) return out;
    std::vector<int> current;
    generate(n, n, max_rows, current, out);
    return out;
}

std::string to_json(const YoungDiagram& lambda) { return nlohmann::json(lambda.parts()).dump(); }

YoungDiagram parse_diagram(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed diagram: ") + e.what());
    }
    if (!j.is_array()) throw ParseError("diagram must be a JSON array");
    std::vector<int> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer() || v.get<long long>() <= 0) throw ParseError("diagram parts must be positive integers");
        parts.push_back(v.get<int>());
    }
    try {
        return YoungDiagram(std::move(parts));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

}  // namespace ygraph

#include "prodsched/core.hpp"

#include <algorithm>
#include <set>

namespace prodsched {

ProblemSpec::ProblemSpec(std::vector<AgentClass> classes, std::optional<long long> objects)
    : classes_(std::move(classes)) {
    if (classes_.empty()) throw ValidationError("spec needs at least one agent class");
    std::set<Rational> seen;
    for (const auto& c : classes_) {
        if (c.completion_time.sign() <= 0)
            throw ValidationError("completion times must be positive");
        if (c.count < 1) throw ValidationError("class counts must be at least 1");
        if (!seen.insert(c.completion_time).second)
            throw ValidationError("completion times must be pairwise distinct across classes");
        num_agents_ += c.count;
    }
    num_objects_ = objects.value_or(num_agents_);
    if (num_objects_ < num_agents_)
        throw ValidationError("object count p must be at least the agent count n");
}

std::size_t ProblemSpec::class_of_agent(long long agent_id) const {
    if (agent_id < 1 || agent_id > num_agents_)
        throw ValidationError("agent id " + std::to_string(agent_id) + " out of range");
    long long upper = 0;
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        upper += classes_[i].count;
        if (agent_id <= upper) return i + 1;
    }
    throw ValidationError("unreachable: agent id not covered by classes");
}

const Rational& ProblemSpec::time_of_agent(long long agent_id) const {
    return classes_[class_of_agent(agent_id) - 1].completion_time;
}

const Rational& ProblemSpec::time_of_class(std::size_t class_index) const {
    if (class_index < 1 || class_index > classes_.size())
        throw ValidationError("class index out of range");
    return classes_[class_index - 1].completion_time;
}

Rational ProblemSpec::rate_sum() const {
    Rational r;
    for (const auto& c : classes_) r += Rational(c.count) / c.completion_time;
    return r;
}

std::vector<Rational> ProblemSpec::expanded_times() const {
    std::vector<Rational> times;
    times.reserve(static_cast<std::size_t>(num_agents_));
    for (const auto& c : classes_)
        for (long long i = 0; i < c.count; ++i) times.push_back(c.completion_time);
    return times;
}

Rational Scheme::duration() const {
    Rational end;
    for (const auto& timeline : objects)
        for (const auto& seg : timeline)
            if (seg.end > end) end = seg.end;
    return end;
}

AssignmentMatrix::AssignmentMatrix(std::vector<std::vector<long long>> rows, Rational au_hours)
    : rows_(std::move(rows)), au_hours_(std::move(au_hours)) {
    const auto n = static_cast<long long>(rows_.size());
    if (n == 0) throw ValidationError("matrix must be non-empty");
    if (au_hours_.sign() <= 0) throw ValidationError("atomic unit must be positive");
    for (const auto& row : rows_)
        if (static_cast<long long>(row.size()) != n)
            throw ValidationError("matrix must be square");
    std::vector<bool> seen(static_cast<std::size_t>(n));
    for (long long j = 0; j < n; ++j) {
        std::fill(seen.begin(), seen.end(), false);
        for (long long i = 0; i < n; ++i) {
            long long agent = rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (agent < 1 || agent > n)
                throw ValidationError("matrix entry out of range");
            if (seen[static_cast<std::size_t>(agent - 1)])
                throw ValidationError("column " + std::to_string(j + 1) +
                                      " is not a permutation of agents");
            seen[static_cast<std::size_t>(agent - 1)] = true;
        }
    }
}

long long AssignmentMatrix::at(long long object, long long interval) const {
    if (object < 1 || object > size() || interval < 1 || interval > size())
        throw ValidationError("matrix index out of range");
    return rows_[static_cast<std::size_t>(object - 1)][static_cast<std::size_t>(interval - 1)];
}

long long AssignmentMatrix::halt_count() const {
    return static_cast<long long>(halt_instants_au().size());
}

std::vector<long long> AssignmentMatrix::halt_instants_au() const {
    std::vector<long long> instants;
    const long long n = size();
    for (long long j = 0; j + 1 < n; ++j) {
        for (const auto& row : rows_) {
            if (row[static_cast<std::size_t>(j)] != row[static_cast<std::size_t>(j + 1)]) {
                instants.push_back(j + 1);
                break;
            }
        }
    }
    return instants;
}

Rational rational_arithmetic(const Rational& a, const Rational& b, ArithmeticOp op) {
    switch (op) {
    case ArithmeticOp::Add: return a + b;
    case ArithmeticOp::Subtract: return a - b;
    case ArithmeticOp::Multiply: return a * b;
    case ArithmeticOp::Divide: return a / b;
    }
    throw ValidationError("unknown arithmetic op");
}

Scheme matrix_to_scheme(const AssignmentMatrix& matrix) {
    Scheme scheme;
    const long long n = matrix.size();
    scheme.objects.reserve(static_cast<std::size_t>(n));
    for (long long i = 1; i <= n; ++i) {
        std::vector<Segment> segments;
        long long run_start = 0;
        for (long long j = 1; j <= n; ++j) {
            if (j == n || matrix.at(i, j + 1) != matrix.at(i, j)) {
                segments.push_back({matrix.at(i, run_start + 1),
                                    Rational(run_start) * matrix.au_hours(),
                                    Rational(j) * matrix.au_hours()});
                run_start = j;
            }
        }
        scheme.objects.push_back(std::move(segments));
    }
    return scheme;
}

namespace {

// Converts an hour instant to an a.u. index, or throws when off-grid.
long long hours_to_au(const Rational& hours, const Rational& au, const std::string& what) {
    Rational q = hours / au;
    if (!q.is_integer())
        throw NotGridAlignedError(what + " at " + hours.to_string() + " h = " +
                                  q.to_string() + " a.u.");
    if (q.num() > BigInt(1) << 40) throw CapacityError("grid index too large");
    return static_cast<long long>(q.num());
}

} // namespace

AssignmentMatrix scheme_to_matrix(const Scheme& scheme, const ProblemSpec& spec) {
    const long long n = spec.num_agents();
    if (scheme.num_objects() != n)
        throw ValidationError("scheme must cover exactly n objects");
    Rational au = spec.rate_sum().reciprocal();

    std::vector<std::vector<long long>> rows(
        static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n), 0));
    for (long long i = 0; i < n; ++i) {
        const auto& timeline = scheme.objects[static_cast<std::size_t>(i)];
        for (const auto& seg : timeline) {
            long long from = hours_to_au(seg.start, au, "segment boundary");
            long long to = hours_to_au(seg.end, au, "segment boundary");
            if (from < 0 || to > n || from >= to)
                throw ValidationError("segment outside the n-column grid");
            for (long long j = from; j < to; ++j) {
                auto& cell = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (cell != 0) throw ValidationError("object worked twice in one interval");
                cell = seg.agent;
            }
        }
    }
    for (const auto& row : rows)
        for (long long cell : row)
            if (cell == 0) throw ValidationError("scheme does not span all n columns");
    return AssignmentMatrix(std::move(rows), au);
}

} // namespace prodsched

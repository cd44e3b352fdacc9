#pragma once

#include <map>
#include <optional>
#include <vector>

#include "prodsched/rational.hpp"

namespace prodsched {

// One class of agents: `count` identical agents, each completing a full
// object in `completion_time` hours.
struct AgentClass {
    Rational completion_time;
    long long count = 1;
};

// The production order: m agent classes building p identical objects,
// p >= n where n is the total agent count. Agents are globally indexed
// 1..n, flattened class by class in declaration order.
class ProblemSpec {
public:
    explicit ProblemSpec(std::vector<AgentClass> classes,
                         std::optional<long long> objects = std::nullopt);

    long long num_agents() const { return num_agents_; }      // n
    long long num_objects() const { return num_objects_; }    // p
    std::size_t num_classes() const { return classes_.size(); } // m
    const std::vector<AgentClass>& classes() const { return classes_; }

    // 1-based class index of a global agent id.
    std::size_t class_of_agent(long long agent_id) const;
    const Rational& time_of_agent(long long agent_id) const;
    const Rational& time_of_class(std::size_t class_index) const;

    // Combined production rate R = sum k_i / t_i in objects/hour.
    Rational rate_sum() const;

    // The n completion times listed agent by agent.
    std::vector<Rational> expanded_times() const;

private:
    std::vector<AgentClass> classes_;
    long long num_agents_ = 0;
    long long num_objects_ = 0;
};

// One continuous stretch of work: `agent` works some object over
// [start, end) hours.
struct Segment {
    long long agent = 0;
    Rational start;
    Rational end;

    friend bool operator==(const Segment&, const Segment&) = default;
};

// Per-object work timelines; objects_[i] belongs to object i+1. Segments are
// expected contiguous from time 0; the verifier reports violations.
struct Scheme {
    std::vector<std::vector<Segment>> objects;

    long long num_objects() const { return static_cast<long long>(objects.size()); }
    Rational duration() const;
};

// n x n grid of agent ids; column j records who works each object during the
// j-th atomic unit. Every column must be a permutation of 1..n.
class AssignmentMatrix {
public:
    AssignmentMatrix(std::vector<std::vector<long long>> rows, Rational au_hours);

    long long size() const { return static_cast<long long>(rows_.size()); }
    long long at(long long object, long long interval) const; // both 1-based
    const std::vector<std::vector<long long>>& rows() const { return rows_; }
    const Rational& au_hours() const { return au_hours_; }

    // Interior column boundaries where at least one entry changes.
    long long halt_count() const;
    std::vector<long long> halt_instants_au() const;

    friend bool operator==(const AssignmentMatrix& a, const AssignmentMatrix& b) {
        return a.rows_ == b.rows_ && a.au_hours_ == b.au_hours_;
    }

private:
    std::vector<std::vector<long long>> rows_;
    Rational au_hours_;
};

enum class WorkUnit { Hours, AtomicUnits };

// Accumulated work per object, keyed by 1-based class index.
struct WorkRecord {
    WorkUnit unit = WorkUnit::Hours;
    std::vector<std::map<std::size_t, Rational>> per_object;
};

// Exact rational arithmetic entry point used by the CLI; the operators on
// Rational serve the same role in code.
enum class ArithmeticOp { Add, Subtract, Multiply, Divide };
Rational rational_arithmetic(const Rational& a, const Rational& b, ArithmeticOp op);

// Rows become maximal constant runs of agent ids converted to hour-valued
// segments; inverse of scheme_to_matrix on grid-aligned schemes.
Scheme matrix_to_scheme(const AssignmentMatrix& matrix);

// Requires every segment boundary to be an integer multiple of the spec's
// atomic unit and the scheme to span exactly n columns.
AssignmentMatrix scheme_to_matrix(const Scheme& scheme, const ProblemSpec& spec);

} // namespace prodsched

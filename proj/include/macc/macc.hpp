#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace macc {

/// Raised when parameters violate a documented precondition.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// `n mod m` mapped into {1, ..., m}; negative `n` is normalized first.
int mod1(long long n, int m);

/// Cyclic run n, n+1, ..., m over {1, ..., K} (wraps past K).
std::vector<int> circ_interval(int n, int m, int K);

/// A cyclically consecutive run of `length` users starting at `first` (1-based).
struct CircInterval {
  int first = 1;
  int length = 0;

  int last(int K) const { return mod1(first + length - 1, K); }
  bool contains(int user, int K) const { return mod1(user - first + 1, K) <= length; }
  std::vector<int> members(int K) const;

  friend bool operator==(const CircInterval&, const CircInterval&) = default;
};

/// Multi-access coded caching parameters: N files, K caches/users, each user
/// reads L consecutive caches, cache memory M = i*N/K.
struct MaccInstance {
  int n_files = 1;
  int n_caches_users = 1;
  int access_degree = 1;
  int memory_index = 0;

  /// Validating constructor; throws InvalidParameter.
  static MaccInstance make(int n_files, int n_caches_users, int access_degree,
                           int memory_index);

  int K() const { return n_caches_users; }
  int L() const { return access_degree; }
  int i() const { return memory_index; }
  /// Number of users each stored subfile reaches (i*L).
  int coverage() const { return memory_index * access_degree; }
  /// Number of subfiles each user still needs (K - iL, floored at 0).
  int deficit() const { return coverage() >= n_caches_users ? 0 : n_caches_users - coverage(); }
  bool fully_covered() const { return coverage() >= n_caches_users; }
  /// Largest index with a non-trivial placement.
  int max_placement_index() const { return n_caches_users / access_degree; }
  /// Largest admissible memory index, ceil(K/L).
  int max_memory_index() const { return (n_caches_users + access_degree - 1) / access_degree; }
};

/// File requested by each user; entry j-1 holds d_j in [1, N].
struct DemandProfile {
  std::vector<int> demands;

  static DemandProfile make(const MaccInstance& instance, std::vector<int> demands);
  /// Worst case: every user asks for a different file when N >= K; files are
  /// reused cyclically otherwise.
  static DemandProfile distinct(const MaccInstance& instance);

  int operator()(int user) const { return demands.at(user - 1); }
};

/// Uncoded cyclic placement. Cache k stores subfile indices
/// {<k-(r-1)L>_K : r in [i]} of every file.
struct PlacementMap {
  int n_caches = 0;
  std::vector<std::vector<int>> cache_contents;  ///< [k-1] -> sorted subfile indices
  std::vector<CircInterval> subfile_users;       ///< [m-1] -> users that can read subfile m

  const std::vector<int>& cache(int k) const { return cache_contents.at(k - 1); }
  const CircInterval& users_of(int m) const { return subfile_users.at(m - 1); }
};

PlacementMap place(const MaccInstance& instance);

/// Subfile indices user `user` reads through its L caches (sorted).
std::vector<int> accessible_subfiles(const MaccInstance& instance, int user);

/// Complement of accessible_subfiles: the K - iL indices the user still needs.
std::vector<int> needed_subfiles(const MaccInstance& instance, int user);

/// Users that can read subfile m: [<m-L+1>_K : <m+(i-1)L>_K].
CircInterval subfile_interval(const MaccInstance& instance, int subfile);

}  // namespace macc

#pragma once

#include <string>
#include <vector>

namespace arr {

// Partition of {1..n} into disjoint nonempty blocks, canonically sorted by
// least element (the restricted-growth enumeration produces this directly).
struct SetPartition {
  std::vector<std::vector<int>> blocks;

  int element_count() const;
  std::string to_string() const;
};

// All partitions of {1..n} with exactly the given number of blocks, in
// lexicographic restricted-growth-string order. Count is the Stirling number
// of the second kind.
std::vector<SetPartition> partitions(int n, int blocks);

// All partitions of {1..n} whose unique nonsingleton block has the given
// size; count = binomial(n, size).
std::vector<SetPartition> unique_block_partitions(int n, int size);

// k-subsets of {1..n} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k);

long long binomial(int n, int k);
long long stirling2(int n, int k);

}  // namespace arr

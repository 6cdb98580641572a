/*
   Copyright 2026 The bczlab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace bcz {

/// Base of every error raised by the core library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point or parameter lies outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class CoprimalityError : public Error {
 public:
  using Error::Error;
};

/// A doubling slope search passed its ceiling without collecting enough
/// points (degenerate, e.g. integer, lattices).
class SearchCeilingExceeded : public Error {
 public:
  using Error::Error;
};

class IterationCeiling : public Error {
 public:
  using Error::Error;
};

/// The lattice criterion and direct iteration disagreed on a return count.
class CriterionMismatch : public Error {
 public:
  using Error::Error;
};

class SlopeCoincidence : public Error {
 public:
  using Error::Error;
};

class OrderError : public Error {
 public:
  using Error::Error;
};

/// Invalid experiment or parse configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace bcz

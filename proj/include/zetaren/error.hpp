/*
 *   Copyright 2026 The zetaren Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file error.hpp
 * @brief Error codes shared by every module.
 */

#ifndef ZETAREN_ERROR_HPP
#define ZETAREN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace zetaren {

enum class Errc {
  BothLogBearing,
  ZeroLeadingCoefficient,
  LogBearingInput,
  DomainViolation,
  OrderNotRepresented,
  LogAtResidueOrder,
  NonPositiveLength,
  InsufficientSpectrum,
  NonPositiveTime,
  TailBoundUnreachable,
  UnsupportedDomain,
  UnsupportedForSpectralBacking,
  UnsupportedStencil,
  SeriesDomainViolation,
  KindMismatch,
  UnsupportedDimension,
  PoleAtSigma,
  DivergentIntegral,
  QuadratureNotConverged,
  LimitNotConverged,
  UnsupportedMode,
  BoundaryPoint,
  MissingKernelData,
  UnsupportedBoundaryCondition,
  PoleEncountered,
  ConfigError,
};

const char* errc_name(Errc e) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace zetaren

#endif

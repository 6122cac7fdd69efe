// Copyright 2026 The susbounds Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "enumeration.hpp"
#include "error.hpp"
#include "extremal.hpp"
#include "mus.hpp"
#include "oracle.hpp"
#include "rational.hpp"
#include "suffix_index.hpp"
#include "sus_query.hpp"
#include "text.hpp"

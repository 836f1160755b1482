// Copyright 2026 The evkb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EVKB_ANNOTATE_ENTITY_TAGGER_HPP_
#define EVKB_ANNOTATE_ENTITY_TAGGER_HPP_

#include <string_view>
#include <vector>

#include "evkb/annotate/types.hpp"
#include "evkb/entities/repository.hpp"

namespace evkb::annotate {

// Looks up every token span that starts and ends with a capitalized word
// (connectors such as "of", "and", "&" allowed inside) in the repository.
// Matches are kept longest first, leftmost on ties, without overlaps.
// Result is ordered by position.
std::vector<EntityMention> recognize_entities(const TokenizedSentence& sentence,
                                              const entities::EntityRepository& repository,
                                              bool require_description);

std::vector<EntityMention> recognize_entities(std::string_view sentence,
                                              const entities::EntityRepository& repository,
                                              bool require_description);

}  // namespace evkb::annotate

#endif  // EVKB_ANNOTATE_ENTITY_TAGGER_HPP_
